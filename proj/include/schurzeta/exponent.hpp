#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schurzeta/diagram.hpp"
#include "schurzeta/scalar.hpp"

namespace schurzeta {

// Exponent attached to one cell: a literal value, the content variable z_k,
// or a named free symbol.
class ExponentExpr {
public:
    enum class Kind { Constant, Content, Symbol };

    static ExponentExpr constant(Scalar v);
    static ExponentExpr content(int k);
    static ExponentExpr symbol(std::string name);

    Kind kind() const { return kind_; }
    const Scalar& constant_value() const { return value_; }
    int content_index() const { return content_; }
    const std::string& symbol_name() const { return symbol_; }

    std::string str() const;

    friend bool operator==(const ExponentExpr&, const ExponentExpr&) = default;

private:
    Kind kind_ = Kind::Constant;
    Scalar value_;
    int content_ = 0;
    std::string symbol_;
};

// Assignment of values to content variables and symbols.
class Binding {
public:
    Binding() = default;

    void set_content(int k, Scalar v) { contents_[k] = std::move(v); }
    void set_symbol(const std::string& name, Scalar v) { symbols_[name] = std::move(v); }

    const std::map<int, Scalar>& contents() const { return contents_; }
    const std::map<std::string, Scalar>& symbols() const { return symbols_; }

    // Throws std::out_of_range on an unbound variable.
    Scalar resolve(const ExponentExpr& e) const;

private:
    std::map<int, Scalar> contents_;
    std::map<std::string, Scalar> symbols_;
};

// Exponent-valued filling of a row-interval diagram, entries row-major.
class ExponentTableau {
public:
    ExponentTableau() = default;
    ExponentTableau(SkewDiagram shape, std::vector<ExponentExpr> entries);

    static ExponentTableau filled(const SkewDiagram& shape,
                                  const std::function<ExponentExpr(Cell)>& f);

    const SkewDiagram& shape() const { return shape_; }
    const std::vector<ExponentExpr>& entries() const { return entries_; }
    const ExponentExpr& at(int row, int col) const;
    ExponentExpr& at(int row, int col);

    std::vector<Scalar> resolve_all(const Binding& b) const;

    // True when every cell on one diagonal carries the same expression.
    bool is_diagonal_constant() const;
    // Expression on diagonal k; requires is_diagonal_constant() and a cell there.
    ExponentExpr diagonal_expr(int k) const;

    std::string str() const;

    friend bool operator==(const ExponentTableau&, const ExponentTableau&) = default;

private:
    SkewDiagram shape_;
    std::vector<ExponentExpr> entries_;
};

// Every cell gets its own content variable z_{col-row}.
ExponentTableau content_fill(const SkewDiagram& shape);

// Hook (p_i+1, 1^{q_j}) filled with content variables: corner z_0, arm
// z_1..z_{p_i}, leg z_{-1}..z_{-q_j}.
ExponentTableau giambelli_entry(const FrobeniusForm& f, int i, int j);

// Entries follow their cells through the anti-diagonal reflection.
ExponentTableau transpose_tableau(const ExponentTableau& t);

// transpose_tableau(giambelli_entry(f,i,j)) with content variables replaced
// through diag_expr (z_k -> diag_expr(k)) before reflecting.
ExponentTableau skew_giambelli_entry(const FrobeniusForm& f, int i, int j,
                                     const std::function<ExponentExpr(int)>& diag_expr);
ExponentTableau skew_giambelli_entry(const FrobeniusForm& f, int i, int j);

// Core, lower and upper exponent tableaux pasted along the laced layout.
ExponentTableau compose_laced(const ExponentTableau& core,
                              const std::optional<ExponentTableau>& lower,
                              const std::optional<ExponentTableau>& upper);

// giambelli_entry(f,i,j) with the wings attached for i==1 / j==1.
ExponentTableau laced_entry(const FrobeniusForm& f, int i, int j,
                            const std::optional<ExponentTableau>& lower,
                            const std::optional<ExponentTableau>& upper);

struct CellDomainReport {
    Cell cell;
    bool is_corner = false;
    double real_part = 0.0;
    bool ok = false;
};

// Convergence domain check: Re >= 1 everywhere, strict at corners.
struct DomainVerdict {
    bool admissible = false;
    std::vector<CellDomainReport> cells;
};

DomainVerdict check_domain(const ExponentTableau& t, const Binding& b);

// True when every entry resolves to an exact nonnegative integer
// (the precondition for exact-mode evaluation).
bool check_integrality(const ExponentTableau& t, const Binding& b);

}  // namespace schurzeta

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace schurzeta {

// Integer partition: weakly decreasing positive parts. The empty partition is legal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition rectangle(int width, int height);

    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const;  // number of cells
    // 1-indexed part; 0 beyond the last row.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool is_rectangle() const;
    bool contains(int row, int col) const;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

// Frobenius coordinates: arms p_i = λ_i - i, legs q_i = λ'_i - i along the main diagonal.
struct FrobeniusForm {
    std::vector<int> arms;
    std::vector<int> legs;
    int diagonal() const { return static_cast<int>(arms.size()); }

    friend bool operator==(const FrobeniusForm&, const FrobeniusForm&) = default;
};

Partition conjugate(const Partition& p);
FrobeniusForm frobenius(const Partition& p);
// Inverse of frobenius(); validates strictly decreasing nonnegative arms and legs.
Partition from_frobenius(const FrobeniusForm& f);
// Hook partition (p+1, 1^q): arm length p right of the corner, leg length q below.
Partition hook_shape(int p, int q);

// All partitions of weight exactly n, in a deterministic order.
std::vector<Partition> partitions_of(int n);
// All partitions of weight 1..n (optionally including the empty one).
std::vector<Partition> partitions_up_to(int n, bool include_empty = false);

}  // namespace schurzeta

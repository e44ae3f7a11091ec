#include "schurzeta/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurzeta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

Partition Partition::rectangle(int width, int height) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("rectangle sides must be positive");
    return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition rows are 1-indexed");
    if (i > rows()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(parts_[0]), 0);
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < parts_[static_cast<std::size_t>(r)]; ++c)
            ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

bool Partition::is_rectangle() const {
    return !parts_.empty() && parts_.front() == parts_.back();
}

bool Partition::contains(int row, int col) const {
    return row >= 1 && col >= 1 && col <= part(row);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Partition conjugate(const Partition& p) { return p.conjugate(); }

FrobeniusForm frobenius(const Partition& p) {
    FrobeniusForm f;
    const Partition q = p.conjugate();
    for (int i = 1; i <= p.rows() && p.part(i) >= i; ++i) {
        f.arms.push_back(p.part(i) - i);
        f.legs.push_back(q.part(i) - i);
    }
    return f;
}

Partition from_frobenius(const FrobeniusForm& f) {
    const int n = f.diagonal();
    if (static_cast<int>(f.legs.size()) != n)
        throw std::invalid_argument("frobenius arms and legs must have equal length");
    for (int i = 0; i < n; ++i) {
        if (f.arms[static_cast<std::size_t>(i)] < 0 || f.legs[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("frobenius coordinates must be nonnegative");
        if (i > 0 && (f.arms[static_cast<std::size_t>(i)] >= f.arms[static_cast<std::size_t>(i - 1)] ||
                      f.legs[static_cast<std::size_t>(i)] >= f.legs[static_cast<std::size_t>(i - 1)]))
            throw std::invalid_argument("frobenius coordinates must strictly decrease");
    }
    if (n == 0) return {};
    // Row i (1..n) has i + p_i cells; column counts determine the rows below
    // the diagonal.
    const int total_rows = 1 + f.legs[0];
    std::vector<int> parts(static_cast<std::size_t>(total_rows), 0);
    for (int i = 1; i <= n; ++i)
        parts[static_cast<std::size_t>(i - 1)] = i + f.arms[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= n; ++j) {
        // Column j reaches row j + q_j.
        for (int r = n + 1; r <= j + f.legs[static_cast<std::size_t>(j - 1)]; ++r)
            parts[static_cast<std::size_t>(r - 1)] = std::max(parts[static_cast<std::size_t>(r - 1)], j);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    Partition result{std::vector<int>(parts)};
    if (frobenius(result).arms != f.arms || frobenius(result).legs != f.legs)
        throw std::invalid_argument("frobenius coordinates do not describe a partition");
    return result;
}

Partition hook_shape(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("hook coordinates must be nonnegative");
    std::vector<int> parts{p + 1};
    parts.insert(parts.end(), static_cast<std::size_t>(q), 1);
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(std::vector<int>(cur));
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        cur.push_back(next);
        gen_partitions(remaining - next, next, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partition weight must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n, bool include_empty) {
    std::vector<Partition> out;
    if (include_empty) out.emplace_back();
    for (int k = 1; k <= n; ++k)
        for (auto& p : partitions_of(k)) out.push_back(std::move(p));
    return out;
}

}  // namespace schurzeta

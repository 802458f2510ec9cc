#pragma once

#include <string>
#include <vector>

namespace symqt {

/// Integer partition; parts are strictly positive and weakly decreasing,
/// trailing zeros are never stored.  part(i) is 1-based and returns 0 beyond
/// the length, matching the usual convention mu_i = 0 for i > l(mu).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition empty() { return Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;  // |mu|
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
    bool is_empty() const { return parts_.empty(); }

    bool contains(const Partition& nu) const;
    Partition conjugate() const;

    /// arm/leg of a box (row i, column j), both 1-based; the box must lie in
    /// the diagram.
    int arm(int i, int j) const;
    int leg(int i, int j) const;
    bool has_box(int i, int j) const { return i >= 1 && j >= 1 && j <= part(i); }

    std::vector<std::pair<int, int>> boxes() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
};

/// mu/nu is a horizontal strip: mu_i >= nu_i >= mu_{i+1} for all i.
bool is_horizontal_strip(const Partition& mu, const Partition& nu);

/// a dominates b (same size required): a_1+...+a_k >= b_1+...+b_k for all k.
bool dominates(const Partition& a, const Partition& b);

/// All nu with nu interlacing below mu (horizontal strip mu/nu), in
/// lexicographically decreasing order (nu = mu first, the empty-most last).
std::vector<Partition> sub_strips(const Partition& mu);

/// All partitions of exactly n with at most N parts, lexicographically
/// decreasing ((n) first).
std::vector<Partition> partitions_of(int n, int N);

/// All partitions with |mu| <= n and l(mu) <= N, graded by size and
/// lexicographically decreasing within each size.
std::vector<Partition> partitions_up_to(int n, int N);

/// Chain mu = mu(0) > mu(1) > ... > mu(L) = empty of interlacing partitions;
/// encodes a reverse semistandard tableau of shape mu with entries in
/// {1..L}: box (i,j) carries the value k for which it lies in
/// mu(k-1) / mu(k).
using StripChain = std::vector<Partition>;

/// All chains of length N (N+1 entries including mu itself); empty when
/// l(mu) > N.  Enumeration order is depth-first with sub_strips order at
/// every step, so output is deterministic.
std::vector<StripChain> enumerate_rtab(const Partition& mu, int N);

/// Value of box (i,j) in the tableau encoded by a chain (0 if absent).
int chain_entry(const StripChain& chain, int i, int j);

Partition parse_partition(const std::string& text);

}  // namespace symqt

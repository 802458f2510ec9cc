#include "symqt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symqt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& nu) const {
    if (nu.length() > length()) return false;
    for (int i = 1; i <= nu.length(); ++i)
        if (nu.part(i) > part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int j = 1; j <= parts_[0]; ++j)
        for (int i = 1; i <= length(); ++i)
            if (part(i) >= j) ++c[j - 1];
    return Partition(std::move(c));
}

int Partition::arm(int i, int j) const {
    if (!has_box(i, j)) throw std::invalid_argument("Partition::arm: box outside diagram");
    return part(i) - j;
}

int Partition::leg(int i, int j) const {
    if (!has_box(i, j)) throw std::invalid_argument("Partition::leg: box outside diagram");
    int l = 0;
    for (int r = i + 1; r <= length(); ++r)
        if (part(r) >= j) ++l;
    return l;
}

std::vector<std::pair<int, int>> Partition::boxes() const {
    std::vector<std::pair<int, int>> b;
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j) b.emplace_back(i, j);
    return b;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

bool is_horizontal_strip(const Partition& mu, const Partition& nu) {
    int n = std::max(mu.length(), nu.length());
    for (int i = 1; i <= n; ++i) {
        if (!(mu.part(i) >= nu.part(i) && nu.part(i) >= mu.part(i + 1))) return false;
    }
    return true;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int pa = 0, pb = 0;
    int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

namespace {

void sub_strips_rec(const Partition& mu, int i, std::vector<int>& acc, std::vector<Partition>& out) {
    if (i > mu.length()) {
        out.emplace_back(acc);
        return;
    }
    for (int v = mu.part(i); v >= mu.part(i + 1); --v) {
        acc.push_back(v);
        sub_strips_rec(mu, i + 1, acc, out);
        acc.pop_back();
    }
}

void partitions_of_rec(int n, int maxpart, int slots, std::vector<int>& acc,
                       std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    if (slots == 0) return;
    for (int v = std::min(n, maxpart); v >= 1; --v) {
        acc.push_back(v);
        partitions_of_rec(n - v, v, slots - 1, acc, out);
        acc.pop_back();
    }
}

void chains_rec(const Partition& mu, int steps, StripChain& acc, std::vector<StripChain>& out) {
    if (steps == 0) {
        if (mu.is_empty()) out.push_back(acc);
        return;
    }
    for (const Partition& nu : sub_strips(mu)) {
        acc.push_back(nu);
        chains_rec(nu, steps - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> sub_strips(const Partition& mu) {
    std::vector<Partition> out;
    std::vector<int> acc;
    sub_strips_rec(mu, 1, acc, out);
    return out;
}

std::vector<Partition> partitions_of(int n, int N) {
    std::vector<Partition> out;
    if (n < 0 || N < 0) return out;
    std::vector<int> acc;
    partitions_of_rec(n, n, N, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n, int N) {
    std::vector<Partition> out;
    for (int d = 0; d <= n; ++d) {
        auto layer = partitions_of(d, N);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<StripChain> enumerate_rtab(const Partition& mu, int N) {
    std::vector<StripChain> out;
    if (mu.length() > N) return out;
    StripChain acc{mu};
    chains_rec(mu, N, acc, out);
    return out;
}

int chain_entry(const StripChain& chain, int i, int j) {
    for (size_t k = 1; k < chain.size(); ++k) {
        if (chain[k - 1].has_box(i, j) && !chain[k].has_box(i, j)) return static_cast<int>(k);
    }
    return 0;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        parts.push_back(std::stoi(tok));
        tok.clear();
    };
    for (char c : text) {
        if (c == '[' || c == ']' || c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.push_back(c);
        } else {
            throw std::invalid_argument("bad partition string: " + text);
        }
    }
    flush();
    return Partition(std::move(parts));
}

}  // namespace symqt

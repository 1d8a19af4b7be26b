#pragma once

// Permutations on {1..m} in one-line notation, with the statistics and
// bijections used throughout this library: descents, excedances, reverse
// excedances, leading descents, the Foata map and its inverse, the
// letter/position reverse map, cycle decompositions, adjacent letter and
// position transpositions, and block-restricted inversion counts.
//
// Positions and letters are 1-based everywhere at the interface.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsx {

/// Sorted set of positive integers (canonical form: strictly increasing).
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(std::vector<int> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        if (!elems_.empty() && elems_.front() < 1)
            throw std::invalid_argument("IndexSet: members must be positive");
    }

    IndexSet(std::initializer_list<int> elems)
        : IndexSet(std::vector<int>(elems)) {}

    bool contains(int i) const {
        return std::binary_search(elems_.begin(), elems_.end(), i);
    }

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    const std::vector<int>& elems() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const IndexSet&) const = default;
    auto operator<=>(const IndexSet&) const = default;

    bool subset_of(const IndexSet& other) const {
        return std::includes(other.elems_.begin(), other.elems_.end(),
                             elems_.begin(), elems_.end());
    }

    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(elems_[i]);
        }
        out += '}';
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
        return os << s.str();
    }

private:
    std::vector<int> elems_;
};

/// A bijection on {1..m}, stored in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line) : letters_(std::move(one_line)) {
        const int m = static_cast<int>(letters_.size());
        if (m < 1) throw std::invalid_argument("Permutation: m >= 1 required");
        std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
        for (int x : letters_) {
            if (x < 1 || x > m || seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("Permutation: not a bijection on {1..m}");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    Permutation(std::initializer_list<int> one_line)
        : Permutation(std::vector<int>(one_line)) {}

    static Permutation identity(int m) {
        std::vector<int> v(static_cast<std::size_t>(m));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    // Accepts the digit form "43521" (m <= 9) or comma-separated integers
    // "4,3,5,2,1" for any m.
    static Permutation parse(std::string_view s) {
        std::vector<int> v;
        if (s.find(',') != std::string_view::npos) {
            std::string tmp(s);
            std::istringstream in(tmp);
            std::string tok;
            while (std::getline(in, tok, ','))
                v.push_back(std::stoi(tok));
        } else {
            for (char c : s) {
                if (c < '1' || c > '9')
                    throw std::invalid_argument("Permutation::parse: bad digit string");
                v.push_back(c - '0');
            }
        }
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(letters_.size()); }

    /// w(i) with 1-based i.
    int operator()(int i) const { return letters_[static_cast<std::size_t>(i) - 1]; }

    const std::vector<int>& letters() const { return letters_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    // Digit string for m <= 9, comma-separated otherwise.
    std::string str() const {
        std::string out;
        if (size() <= 9) {
            for (int x : letters_) out += static_cast<char>('0' + x);
        } else {
            for (std::size_t i = 0; i < letters_.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(letters_[i]);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Permutation& w) {
        return os << w.str();
    }

private:
    std::vector<int> letters_;
};

/// Cycles in standard form: each cycle starts with its maximum, cycles
/// ordered by increasing maximum.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
};

/// Des(w) = {i in [m-1] : w(i) > w(i+1)}.
inline IndexSet descent_set(const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) out.push_back(i);
    return IndexSet(std::move(out));
}

inline int des(const Permutation& w) { return static_cast<int>(descent_set(w).size()); }

/// {i : w(i) > i}.
inline IndexSet excedance_set(const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i <= w.size(); ++i)
        if (w(i) > i) out.push_back(i);
    return IndexSet(std::move(out));
}

inline int exc(const Permutation& w) { return static_cast<int>(excedance_set(w).size()); }

/// Rexc(w) = {i : w(i) < i}.
inline IndexSet reverse_excedance_set(const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i <= w.size(); ++i)
        if (w(i) < i) out.push_back(i);
    return IndexSet(std::move(out));
}

/// LdDes(w) = {w(i) : i in Des(w)}, the letters sitting at descent positions.
inline IndexSet leading_descent_set(const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) out.push_back(w(i));
    return IndexSet(std::move(out));
}

struct AbcDecomposition {
    IndexSet a;  // {i in [m-1] : i not in Rexc, i+1 in Rexc}
    IndexSet b;  // {i in [m-1] : i in Rexc, i+1 not in Rexc}
    IndexSet c;  // the rest: i, i+1 both in or both out
};

/// Splits {1..m-1} by how {i, i+1} meets Rexc(w).  The three parts are
/// disjoint and cover {1..m-1}.
inline AbcDecomposition abc_decomposition(const Permutation& w) {
    const IndexSet rexc = reverse_excedance_set(w);
    std::vector<int> a, b, c;
    for (int i = 1; i < w.size(); ++i) {
        const bool lo = rexc.contains(i);
        const bool hi = rexc.contains(i + 1);
        if (!lo && hi) a.push_back(i);
        else if (lo && !hi) b.push_back(i);
        else c.push_back(i);
    }
    return {IndexSet(std::move(a)), IndexSet(std::move(b)), IndexSet(std::move(c))};
}

/// Standard cycle form: rotate each cycle so its maximum leads, order
/// cycles by increasing maximum.
inline CycleDecomposition cycle_decomposition(const Permutation& w) {
    const int m = w.size();
    std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= m; ++start) {
        if (used[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            used[static_cast<std::size_t>(x)] = true;
            cyc.push_back(x);
            x = w(x);
        } while (x != start);
        auto maxit = std::max_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), maxit, cyc.end());
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& p, const auto& q) { return p.front() < q.front(); });
    return {std::move(cycles)};
}

/// CT(w): cycle lengths in standard order (a composition of m).
inline std::vector<int> cycle_type(const Permutation& w) {
    std::vector<int> out;
    for (const auto& c : cycle_decomposition(w).cycles)
        out.push_back(static_cast<int>(c.size()));
    return out;
}

/// Foata map F: write w in standard cycle form and erase the parentheses.
inline Permutation foata(const Permutation& w) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(w.size()));
    for (const auto& c : cycle_decomposition(w).cycles)
        out.insert(out.end(), c.begin(), c.end());
    return Permutation(std::move(out));
}

/// Inverse Foata map: insert a parenthesis before each strict left-to-right
/// maximum of v and read the result as cycles.
inline Permutation foata_inverse(const Permutation& v) {
    const int m = v.size();
    std::vector<int> out(static_cast<std::size_t>(m) + 1, 0);
    int head = 1;      // position of the current cycle head
    int best = v(1);   // running maximum
    for (int i = 2; i <= m; ++i) {
        if (v(i) > best) {
            out[static_cast<std::size_t>(v(i - 1))] = v(head);  // close the cycle
            head = i;
            best = v(i);
        } else {
            out[static_cast<std::size_t>(v(i - 1))] = v(i);
        }
    }
    out[static_cast<std::size_t>(v(m))] = v(head);
    return Permutation(std::vector<int>(out.begin() + 1, out.end()));
}

/// Reverse letters (x -> m+1-x) then reverse positions; an involution that
/// swaps the excedance and reverse-excedance statistics.
inline Permutation reverse_map(const Permutation& u) {
    const int m = u.size();
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        out[static_cast<std::size_t>(m - i)] = m + 1 - u(i);
    return Permutation(std::move(out));
}

/// Group inverse.
inline Permutation inverse(const Permutation& w) {
    std::vector<int> out(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i)
        out[static_cast<std::size_t>(w(i)) - 1] = i;
    return Permutation(std::move(out));
}

/// t_i: exchange the letters i and i+1 wherever they occur.
inline Permutation swap_letters(const Permutation& w, int i) {
    if (i < 1 || i >= w.size())
        throw std::invalid_argument("swap_letters: index out of range");
    std::vector<int> out = w.letters();
    for (int& x : out) {
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
    }
    return Permutation(std::move(out));
}

/// s_i: exchange the entries at positions i and i+1.
inline Permutation swap_positions(const Permutation& w, int i) {
    if (i < 1 || i >= w.size())
        throw std::invalid_argument("swap_positions: index out of range");
    std::vector<int> out = w.letters();
    std::swap(out[static_cast<std::size_t>(i) - 1], out[static_cast<std::size_t>(i)]);
    return Permutation(std::move(out));
}

/// |inv_E(w)|: inversions (i<j, w(i)>w(j)) whose whole position block
/// {i,...,j-1} lies inside E.  E = {1..m-1} gives the ordinary inversion
/// number; E = {} gives 0.
inline long long inversion_count_restricted(const Permutation& w, const IndexSet& e) {
    const int m = w.size();
    long long count = 0;
    for (int i = 1; i < m; ++i) {
        if (!e.contains(i)) continue;
        for (int j = i + 1; j <= m; ++j) {
            // positions i..j-1 must all be in E
            if (j > i + 1 && !e.contains(j - 1)) break;
            if (w(i) > w(j)) ++count;
        }
    }
    return count;
}

inline long long inversion_count(const Permutation& w) {
    long long count = 0;
    for (int i = 1; i < w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

/// Calls fn(w) for every w in S_m, in lexicographic order.
template <typename F>
void for_each_permutation(int m, F&& fn) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace hsx

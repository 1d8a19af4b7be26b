#pragma once

// Orbit representative for letter-swap groups.  For I inside {1..m-1} the
// transpositions t_i (i in I) generate a product of symmetric groups
// acting on runs of consecutive letters ("regions").  Within the orbit
// E(w) of a permutation w there is exactly one u whose inverse Foata image
// ascends at every i in I.  The construction standardizes the region word
// of w: write w with each letter replaced by its region, parenthesize
// before strict left-to-right maxima, order the occurrences of each region
// by comparing successor letters along the (refined) cycles, and
// standardize periodic ties by order of appearance.  Occurrences of a
// cycle's head letter may split the cycle when they receive a new running
// maximum, so the split pattern is resolved against the record structure
// of each candidate assignment; the ascent property of the inverse Foata
// image is verified directly before a candidate is accepted.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "hsx/permutation.hpp"

namespace hsx {

namespace detail {

// region index (0-based) of each letter 1..m under the runs induced by I
inline std::vector<int> letter_regions(int m, const IndexSet& i_set) {
    std::vector<int> region(static_cast<std::size_t>(m) + 1, 0);
    int current = 0;
    for (int x = 1; x <= m; ++x) {
        if (x > 1 && !i_set.contains(x - 1)) ++current;
        region[static_cast<std::size_t>(x)] = current;
    }
    return region;
}

}  // namespace detail

/// The unique member u of the t_i-orbit of w (i in I) whose inverse Foata
/// image has ascents at every position of I.
inline Permutation unique_ascending_representative(const Permutation& w, const IndexSet& i_set) {
    const int m = w.size();
    for (int i : i_set)
        if (i < 1 || i >= m)
            throw std::invalid_argument("unique_ascending_representative: I must lie in {1..m-1}");

    const std::vector<int> region = detail::letter_regions(m, i_set);
    const int region_count = region[static_cast<std::size_t>(m)] + 1;

    // lowest value of each region
    std::vector<int> region_lo(static_cast<std::size_t>(region_count), 0);
    for (int x = m; x >= 1; --x) region_lo[static_cast<std::size_t>(region[static_cast<std::size_t>(x)])] = x;

    // region word of w and its coarse cycle structure (parenthesize before
    // strict left-to-right maxima of the word)
    std::vector<int> word(static_cast<std::size_t>(m));
    for (int pos = 0; pos < m; ++pos)
        word[static_cast<std::size_t>(pos)] = region[static_cast<std::size_t>(w(pos + 1))];

    std::vector<int> cycle_of(static_cast<std::size_t>(m));
    std::vector<int> cycle_head;  // position of each cycle's head
    {
        int best = -1;
        for (int pos = 0; pos < m; ++pos) {
            if (word[static_cast<std::size_t>(pos)] > best) {
                best = word[static_cast<std::size_t>(pos)];
                cycle_head.push_back(pos);
            }
            cycle_of[static_cast<std::size_t>(pos)] = static_cast<int>(cycle_head.size()) - 1;
        }
    }

    // positions of the head letter within its own cycle, beyond the head:
    // the candidate split points
    std::vector<int> split_candidates;
    for (int pos = 0; pos < m; ++pos) {
        const int c = cycle_of[static_cast<std::size_t>(pos)];
        if (pos != cycle_head[static_cast<std::size_t>(c)] &&
            word[static_cast<std::size_t>(pos)] ==
                word[static_cast<std::size_t>(cycle_head[static_cast<std::size_t>(c)])])
            split_candidates.push_back(pos);
    }
    if (split_candidates.size() > 20)
        throw std::invalid_argument("unique_ascending_representative: carrier too large");

    std::set<std::vector<int>> solutions;

    const std::uint32_t guesses = 1u << split_candidates.size();
    for (std::uint32_t guess = 0; guess < guesses; ++guess) {
        std::vector<bool> splits(static_cast<std::size_t>(m), false);
        for (std::size_t t = 0; t < split_candidates.size(); ++t)
            if (guess & (1u << t)) splits[static_cast<std::size_t>(split_candidates[t])] = true;

        // refined cycles: a new one opens at every word head or guessed split
        std::vector<int> refined_head(static_cast<std::size_t>(m));
        std::vector<int> follow(static_cast<std::size_t>(m));
        for (int pos = 0; pos < m; ++pos) {
            const bool opens = pos == cycle_head[static_cast<std::size_t>(
                                          cycle_of[static_cast<std::size_t>(pos)])] ||
                               splits[static_cast<std::size_t>(pos)];
            refined_head[static_cast<std::size_t>(pos)] = opens
                ? pos
                : refined_head[static_cast<std::size_t>(pos) - 1];
        }
        for (int pos = 0; pos < m; ++pos) {
            const bool next_opens =
                pos + 1 >= m ||
                cycle_of[static_cast<std::size_t>(pos + 1)] != cycle_of[static_cast<std::size_t>(pos)] ||
                splits[static_cast<std::size_t>(pos + 1)];
            follow[static_cast<std::size_t>(pos)] =
                next_opens ? refined_head[static_cast<std::size_t>(pos)] : pos + 1;
        }

        // occurrence order within one region: compare successor letters
        // along follow chains; a periodic tie standardizes by position
        auto precedes = [&](int x, int y) {
            int fx = follow[static_cast<std::size_t>(x)];
            int fy = follow[static_cast<std::size_t>(y)];
            // follow is a bijection, so the pair orbit is periodic with
            // period at most m^2; an all-equal orbit is a genuine tie
            for (int steps = 0; steps <= m * m; ++steps) {
                if (word[static_cast<std::size_t>(fx)] != word[static_cast<std::size_t>(fy)])
                    return word[static_cast<std::size_t>(fx)] < word[static_cast<std::size_t>(fy)];
                fx = follow[static_cast<std::size_t>(fx)];
                fy = follow[static_cast<std::size_t>(fy)];
            }
            return x < y;
        };

        std::vector<int> value_at(static_cast<std::size_t>(m), 0);
        for (int reg = 0; reg < region_count; ++reg) {
            std::vector<int> occurrences;
            for (int pos = 0; pos < m; ++pos)
                if (word[static_cast<std::size_t>(pos)] == reg) occurrences.push_back(pos);
            std::sort(occurrences.begin(), occurrences.end(), precedes);
            int value = region_lo[static_cast<std::size_t>(reg)];
            for (int pos : occurrences) value_at[static_cast<std::size_t>(pos)] = value++;
        }

        const Permutation candidate{value_at};
        const Permutation image = foata_inverse(candidate);
        bool ascending = true;
        for (int i : i_set)
            if (image(i) > image(i + 1)) {
                ascending = false;
                break;
            }
        if (ascending) solutions.insert(candidate.letters());
    }

    if (solutions.size() != 1)
        throw std::logic_error("unique_ascending_representative: expected exactly one "
                               "ascending orbit member, found " +
                               std::to_string(solutions.size()));
    return Permutation(*solutions.begin());
}

/// Brute-force oracle: scans the whole orbit E(w) and returns every member
/// whose inverse Foata image ascends at I.
inline std::vector<Permutation> ascending_orbit_members(const Permutation& w,
                                                        const IndexSet& i_set) {
    const int m = w.size();
    const std::vector<int> region = detail::letter_regions(m, i_set);

    // positions of each region's letters in w, and the values they own
    const int region_count = region[static_cast<std::size_t>(m)] + 1;
    std::vector<std::vector<int>> positions(static_cast<std::size_t>(region_count));
    std::vector<std::vector<int>> values(static_cast<std::size_t>(region_count));
    for (int pos = 1; pos <= m; ++pos)
        positions[static_cast<std::size_t>(region[static_cast<std::size_t>(w(pos))])].push_back(pos);
    for (int x = 1; x <= m; ++x)
        values[static_cast<std::size_t>(region[static_cast<std::size_t>(x)])].push_back(x);

    std::vector<Permutation> hits;
    std::vector<int> letters(static_cast<std::size_t>(m), 0);
    auto assign = [&](auto&& self, int reg) -> void {
        if (reg == region_count) {
            const Permutation u{letters};
            const Permutation image = foata_inverse(u);
            for (int i : i_set)
                if (image(i) > image(i + 1)) return;
            hits.push_back(u);
            return;
        }
        std::vector<int> vals = values[static_cast<std::size_t>(reg)];
        std::sort(vals.begin(), vals.end());
        do {
            for (std::size_t t = 0; t < vals.size(); ++t)
                letters[static_cast<std::size_t>(positions[static_cast<std::size_t>(reg)][t]) - 1] =
                    vals[t];
            self(self, reg + 1);
        } while (std::next_permutation(vals.begin(), vals.end()));
    };
    assign(assign, 0);
    return hits;
}

}  // namespace hsx

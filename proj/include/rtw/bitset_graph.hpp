#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace rtw {

// Adjacency matrix packed into 64-bit words, one row per vertex.
class BitGraph {
public:
    BitGraph() = default;
    explicit BitGraph(int n)
        : n_(n), words_((n + 63) >> 6), bits_(static_cast<size_t>(n) * ((n + 63) >> 6), 0) {}

    int size() const { return n_; }
    int words() const { return words_; }

    void add_edge(int u, int v) {
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
        bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
    }
    void remove_edge(int u, int v) {
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
        bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
    }
    bool has_edge(int u, int v) const {
        return bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63) & 1;
    }
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

    int degree(int v) const;
    size_t edge_count() const;
    bool common_neighbor(int u, int v) const;
    BitGraph complement() const;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

// Size of a maximum clique; stops early once a clique of size stop_at exists
// (the return value is then only a lower bound, >= stop_at).
int max_clique_size(const BitGraph& g, int stop_at = std::numeric_limits<int>::max());

bool has_clique(const BitGraph& g, int k);

// Maximum clique, ties broken toward the lexicographically smallest vertex
// set (compared as sorted index lists).
std::vector<int> max_clique_lex(const BitGraph& g);

// Lexicographically smallest clique of exactly k vertices, empty if none.
std::vector<int> clique_of_size(const BitGraph& g, int k);

int independence_number(const BitGraph& g);
std::vector<int> max_independent_set_lex(const BitGraph& g);

// Bron-Kerbosch with pivoting; emits every maximal clique exactly once, in a
// deterministic order, as a sorted vertex list.
void maximal_cliques(const BitGraph& g, const std::function<void(const std::vector<int>&)>& emit);

}  // namespace rtw

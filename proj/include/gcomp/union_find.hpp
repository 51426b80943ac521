#pragma once

#include <numeric>
#include <vector>

namespace gcomp {

/// Disjoint-set forest with path halving and union by size. Tracks the
/// number of live components so callers can reset and reuse it as scratch.
class UnionFind {
public:
    explicit UnionFind(int n = 0) { reset(n); }

    void reset(int n)
    {
        parent_.resize(n);
        size_.assign(n, 1);
        std::iota(parent_.begin(), parent_.end(), 0);
        components_ = n;
    }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    bool same(int a, int b) { return find(a) == find(b); }

    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_ = 0;
};

}  // namespace gcomp

#pragma once

// Core domain types for k-sum b-free search over integer lattice boxes:
// points, boxes with dense row-major indexing, bit-packed point sets, and
// the fundamental freeness check (witness finding).

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumfree {

// Caller-side misuse (bad dimensions, k < 2, inner set not free, ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Problem too large for the dense representations.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bit-packed sets are capped; larger boxes are rejected, never degraded.
inline constexpr int64_t kMaxPointSetVolume = int64_t{1} << 24;

// A d-dimensional integer vector, d in {1,2,3}. Coordinates are unrestricted
// here; Box and Instance enforce positivity where the lattice requires it,
// so transient arithmetic (residuals, geometry) can go through zero.
class LatticePoint {
public:
    static constexpr int kMaxDim = 3;

    LatticePoint(std::initializer_list<int64_t> coords) {
        init(coords.begin(), static_cast<int>(coords.size()));
    }
    explicit LatticePoint(const std::vector<int64_t>& coords) {
        init(coords.data(), static_cast<int>(coords.size()));
    }

    int dim() const { return dim_; }
    int64_t operator[](int i) const { return c_[i]; }
    void set(int i, int64_t v) { c_[i] = v; }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }

    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
        requireSameDim(a, b);
        LatticePoint r = a;
        for (int i = 0; i < a.dim_; ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
        requireSameDim(a, b);
        LatticePoint r = a;
        for (int i = 0; i < a.dim_; ++i) r.c_[i] -= b.c_[i];
        return r;
    }

    // Coordinate-wise comparison (the paper's partial order on points).
    friend bool coordwise_leq(const LatticePoint& a, const LatticePoint& b) {
        requireSameDim(a, b);
        for (int i = 0; i < a.dim_; ++i)
            if (a.c_[i] > b.c_[i]) return false;
        return true;
    }

    bool all_at_least(int64_t v) const {
        for (int i = 0; i < dim_; ++i)
            if (c_[i] < v) return false;
        return true;
    }

    int64_t coord_sum() const {
        int64_t s = 0;
        for (int i = 0; i < dim_; ++i) s += c_[i];
        return s;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim_; ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

private:
    static void requireSameDim(const LatticePoint& a, const LatticePoint& b) {
        if (a.dim_ != b.dim_)
            throw UsageError("mixed-dimension point arithmetic");
    }
    void init(const int64_t* p, int n) {
        if (n < 1 || n > kMaxDim)
            throw UsageError("lattice points must have 1 to 3 coordinates");
        dim_ = n;
        c_.fill(0);
        for (int i = 0; i < n; ++i) c_[i] = p[i];
    }

    int dim_ = 0;
    std::array<int64_t, kMaxDim> c_{};
};

// (min coordinate, max coordinate) of a point; degenerates to (x, x) in 1-d.
std::pair<int64_t, int64_t> min_max_coord(const LatticePoint& p);

// The lattice box [n] = [n1] x ... x [nd] with a dense index map.
// Indexing is row-major with the last coordinate fastest; all modules share
// this order, so "dense index order" is well defined project-wide.
class Box {
public:
    explicit Box(LatticePoint extent);

    int dim() const { return extent_.dim(); }
    const LatticePoint& extent() const { return extent_; }
    int64_t volume() const { return volume_; }

    bool contains(const LatticePoint& p) const {
        if (p.dim() != dim()) return false;
        for (int i = 0; i < dim(); ++i)
            if (p[i] < 1 || p[i] > extent_[i]) return false;
        return true;
    }

    int64_t index_of(const LatticePoint& p) const {
        int64_t idx = 0;
        for (int i = 0; i < dim(); ++i) idx = idx * extent_[i] + (p[i] - 1);
        return idx;
    }

    LatticePoint point_at(int64_t idx) const {
        LatticePoint p = extent_;
        for (int i = dim() - 1; i >= 0; --i) {
            p.set(i, idx % extent_[i] + 1);
            idx /= extent_[i];
        }
        return p;
    }

    // Visits every (point, dense index) pair in index order.
    template <typename F>
    void for_each_point(F&& f) const {
        LatticePoint p = extent_;
        for (int i = 0; i < dim(); ++i) p.set(i, 1);
        int64_t idx = 0;
        for (;;) {
            f(static_cast<const LatticePoint&>(p), idx);
            int i = dim() - 1;
            while (i >= 0 && p[i] == extent_[i]) {
                p.set(i, 1);
                --i;
            }
            if (i < 0) break;
            p.set(i, p[i] + 1);
            ++idx;
        }
    }

    friend bool operator==(const Box& a, const Box& b) { return a.extent_ == b.extent_; }
    friend bool operator!=(const Box& a, const Box& b) { return !(a == b); }

private:
    LatticePoint extent_;
    int64_t volume_;
};

// One k-sum b-free problem: forbid a1 + ... + ak = b with all ai in the set.
class Instance {
public:
    Instance(int k, LatticePoint target, Box box);

    int k() const { return k_; }
    const LatticePoint& target() const { return target_; }
    const Box& box() const { return box_; }

    // Some coordinate of b is below k, so no k summands with coordinates
    // >= 1 can reach it; the full box is free.
    bool vacuous() const {
        for (int i = 0; i < target_.dim(); ++i)
            if (target_[i] < k_) return true;
        return false;
    }

private:
    int k_;
    LatticePoint target_;
    Box box_;
};

// Bit-packed membership set over a Box with cached cardinality.
class PointSet {
public:
    explicit PointSet(const Box& box);

    static PointSet full(const Box& box);
    static PointSet of(const Box& box, std::initializer_list<LatticePoint> pts);

    const Box& box() const { return box_; }
    int64_t cardinality() const { return card_; }

    bool contains_index(int64_t idx) const {
        return (words_[idx >> 6] >> (idx & 63)) & 1;
    }
    bool contains(const LatticePoint& p) const {
        return box_.contains(p) && contains_index(box_.index_of(p));
    }

    void insert_index(int64_t idx);
    void remove_index(int64_t idx);
    void insert(const LatticePoint& p) { insert_index(box_.index_of(p)); }
    void remove(const LatticePoint& p) { remove_index(box_.index_of(p)); }

    std::vector<int64_t> member_indices() const;

    template <typename F>
    void for_each_member(F&& f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(int64_t(w) * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    // Fresh population count, for validating the cached cardinality.
    int64_t recount() const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.box_ == b.box_ && a.words_ == b.words_;
    }
    friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

private:
    Box box_;
    std::vector<uint64_t> words_;
    int64_t card_ = 0;
};

// A solution multiset witnessing non-freeness: k members (repetition
// allowed) summing coordinate-wise to the instance target.
struct Witness {
    std::vector<LatticePoint> summands;  // non-decreasing in dense index
};

// Searches for a multiset of k members of s summing to the target.
// Summands are generated in non-decreasing index order so each multiset is
// visited once; partial sums are pruned coordinate-wise against the residual.
std::optional<Witness> find_witness(const PointSet& s, const Instance& inst);

bool is_free(const PointSet& s, const Instance& inst);

}  // namespace sumfree

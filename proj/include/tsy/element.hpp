#pragma once

#include <map>
#include <stdexcept>

#include "tsy/rational.hpp"
#include "tsy/space.hpp"

namespace tsy {

enum class Kind { Sym, Ext };

struct Factor {
    Space space;
    int power = 0;
    Kind kind = Kind::Sym;

    int64_t dim() const {
        return kind == Kind::Sym ? sym_dim(space.dim, power) : ext_dim(space.dim, power);
    }
    int64_t label_rank(const FactorLabel& l) const {
        return kind == Kind::Sym ? sym_rank(l) : ext_rank(space.dim, l);
    }
    FactorLabel label_unrank(int64_t r) const {
        return kind == Kind::Sym ? sym_unrank(space.dim, power, r)
                                 : ext_unrank(space.dim, power, r);
    }
    bool operator==(const Factor& o) const {
        return space == o.space && power == o.power && kind == o.kind;
    }
};

// A graded piece: an ordered tensor product of symmetric and exterior powers
// of named spaces. Exterior powers beyond the space dimension are the zero
// space and everything mapping through them collapses to zero.
struct Piece {
    std::vector<Factor> factors;

    int64_t dim() const {
        int64_t d = 1;
        for (const auto& f : factors) d *= f.dim();
        return d;
    }
    bool operator==(const Piece& o) const { return factors == o.factors; }

    // Flat coordinate of a label tuple; factor-major mixed radix.
    int64_t index_of(const std::vector<FactorLabel>& labels) const {
        int64_t idx = 0;
        for (size_t f = 0; f < factors.size(); ++f)
            idx = idx * factors[f].dim() + factors[f].label_rank(labels[f]);
        return idx;
    }
    std::vector<FactorLabel> label_of(int64_t idx) const {
        std::vector<FactorLabel> out(factors.size());
        for (size_t f = factors.size(); f-- > 0;) {
            int64_t d = factors[f].dim();
            out[f] = factors[f].label_unrank(idx % d);
            idx /= d;
        }
        return out;
    }
};

using MultiLabel = std::vector<FactorLabel>;

bool valid_label(const Piece& p, const MultiLabel& l);

// Grading key of a basis label: per distinct space (in factor order), the sum
// of the weights of all variables appearing, with multiplicity. Empty when
// any participating space is ungraded.
WeightKey label_weight(const Piece& p, const MultiLabel& l);

// Sparse element of a graded piece; no zero coefficients are ever stored.
class El {
public:
    El() = default;
    explicit El(Piece piece) : piece_(std::move(piece)) {}

    const Piece& piece() const { return piece_; }
    const std::map<MultiLabel, Rat>& terms() const { return c_; }
    bool zero() const { return c_.empty(); }

    void add(const MultiLabel& l, const Rat& v) {
        if (v == 0) return;
        auto it = c_.find(l);
        if (it == c_.end()) {
            c_.emplace(l, v);
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    Rat coeff(const MultiLabel& l) const {
        auto it = c_.find(l);
        return it == c_.end() ? Rat(0) : it->second;
    }

    El& operator+=(const El& o) {
        require_same_piece(o);
        for (const auto& [l, v] : o.c_) add(l, v);
        return *this;
    }
    El& operator-=(const El& o) {
        require_same_piece(o);
        for (const auto& [l, v] : o.c_) add(l, -v);
        return *this;
    }
    El& operator*=(const Rat& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [l, v] : c_) v *= s;
        return *this;
    }

    friend El operator+(El a, const El& b) { return a += b; }
    friend El operator-(El a, const El& b) { return a -= b; }
    friend El operator*(const Rat& s, El a) { return a *= s; }
    bool operator==(const El& o) const { return piece_ == o.piece_ && c_ == o.c_; }

    RatVec coords() const {
        RatVec v(piece_.dim(), Rat(0));
        for (const auto& [l, x] : c_) v[piece_.index_of(l)] = x;
        return v;
    }
    SparseVec sparse_coords() const {
        SparseVec v;
        v.reserve(c_.size());
        for (const auto& [l, x] : c_) v.emplace_back(piece_.index_of(l), x);
        sort_and_combine(v);
        return v;
    }
    static El from_coords(const Piece& p, const RatVec& v) {
        El e(p);
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) e.add(p.label_of(static_cast<int64_t>(i)), v[i]);
        return e;
    }

private:
    void require_same_piece(const El& o) const {
        if (!(piece_ == o.piece_)) throw std::invalid_argument("graded piece mismatch");
    }
    Piece piece_;
    std::map<MultiLabel, Rat> c_;
};

// Monomial/wedge basis element constructors.
El basis_element(const Piece& p, const MultiLabel& l);

std::string label_str(const Piece& p, const MultiLabel& l);
std::string element_str(const El& e);

}  // namespace tsy

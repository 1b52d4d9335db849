#pragma once

#include <map>

#include "tsy/multilinear.hpp"

namespace tsy {

struct MissingDegree : std::runtime_error {
    explicit MissingDegree(int d)
        : std::runtime_error("ideal slice is missing degree " + std::to_string(d)) {}
};

struct SliceNotMultiplicative : std::runtime_error {
    explicit SliceNotMultiplicative(int d)
        : std::runtime_error("product left the provided slice in degree " + std::to_string(d)) {}
};

enum class Provenance { Exact, Sampled };

// A few graded components of a homogeneous ideal, each given by an explicit
// basis inside S^d(V). On construction the bases are reduced (independence is
// certified) and, for consecutive provided degrees, closure of the slice
// under multiplication by the ambient variables is checked exactly.
class GradedIdealSlice {
public:
    GradedIdealSlice(Space ambient, std::map<int, std::vector<El>> degrees,
                     Provenance provenance);

    const Space& ambient() const { return ambient_; }
    Provenance provenance() const { return provenance_; }
    bool provided(int d) const { return degrees_.count(d) > 0; }
    int min_provided() const { return degrees_.empty() ? 0 : degrees_.begin()->first; }

    // Dimension of the degree-d component; degrees below the smallest
    // provided one are the zero space, anything else unknown.
    int64_t dim(int d) const;
    const std::vector<El>& basis(int d) const;

    // Coordinates of v in the reduced degree-d basis; exact membership is
    // mandatory. Coordinates refer to the reduced (echelon) basis.
    SparseVec project(int d, const El& v) const;

    // Reduced basis elements (echelon rows) of degree d.
    const std::vector<El>& reduced_basis(int d) const;

private:
    struct DegreeData {
        std::vector<El> given;
        std::vector<El> reduced;
        RrefResult rref;
    };
    const DegreeData& at(int d) const;

    Space ambient_;
    Provenance provenance_;
    std::map<int, DegreeData> degrees_;
};

// Exact slice of a determinantal ideal: degree 2 spanned by the 2x2 minors
// of the generic matrix on U x W, degree 3 by their products with the
// variables. (The ideal is generated in degree two.)
GradedIdealSlice generic_matrix_minor_slice(int nu, int nw);

}  // namespace tsy

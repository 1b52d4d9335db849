#include "tsy/slice.hpp"

namespace tsy {

GradedIdealSlice::GradedIdealSlice(Space ambient, std::map<int, std::vector<El>> degrees,
                                   Provenance provenance)
    : ambient_(std::move(ambient)), provenance_(provenance) {
    for (auto& [d, basis] : degrees) {
        DegreeData data;
        data.given = std::move(basis);
        data.rref = rref(coordinate_matrix(data.given));
        if (data.rref.rank() != static_cast<int64_t>(data.given.size()))
            throw std::invalid_argument("ideal slice basis is linearly dependent");
        Piece p{{Factor{ambient_, d, Kind::Sym}}};
        for (int64_t r = 0; r < data.rref.rank(); ++r) {
            El e(p);
            for (const auto& [c, v] : data.rref.reduced.row(r)) e.add(p.label_of(c), v);
            data.reduced.push_back(std::move(e));
        }
        degrees_.emplace(d, std::move(data));
    }
    // multiplicative closure between consecutive provided degrees
    for (const auto& [d, data] : degrees_) {
        if (!provided(d + 1)) continue;
        for (const auto& f : data.given)
            for (uint16_t var = 0; var < static_cast<uint16_t>(ambient_.dim); ++var)
                project(d + 1, multiply_variable(f, var));
    }
}

const GradedIdealSlice::DegreeData& GradedIdealSlice::at(int d) const {
    auto it = degrees_.find(d);
    if (it == degrees_.end()) throw MissingDegree(d);
    return it->second;
}

int64_t GradedIdealSlice::dim(int d) const {
    if (!provided(d)) {
        if (d < min_provided()) return 0;
        throw MissingDegree(d);
    }
    return static_cast<int64_t>(at(d).given.size());
}

const std::vector<El>& GradedIdealSlice::basis(int d) const { return at(d).given; }
const std::vector<El>& GradedIdealSlice::reduced_basis(int d) const { return at(d).reduced; }

SparseVec GradedIdealSlice::project(int d, const El& v) const {
    if (!provided(d)) {
        if (d < min_provided()) {
            if (!v.zero()) throw SliceNotMultiplicative(d);
            return {};
        }
        throw MissingDegree(d);
    }
    const DegreeData& data = at(d);
    SparseVec coords;
    SparseVec residue = reduce_sparse(data.rref, v.sparse_coords());
    if (!residue.empty()) throw SliceNotMultiplicative(d);
    // coefficients against the echelon basis are just the pivot entries
    const auto& pivots = data.rref.pivots;
    SparseVec sc = v.sparse_coords();
    size_t pi = 0;
    for (const auto& [c, val] : sc) {
        while (pi < pivots.size() && pivots[pi] < c) ++pi;
        if (pi < pivots.size() && pivots[pi] == c)
            coords.emplace_back(static_cast<int64_t>(pi), val);
    }
    return coords;
}

GradedIdealSlice generic_matrix_minor_slice(int nu, int nw) {
    Space u = standard_graded_space("u", nu), w = standard_graded_space("w", nw);
    Space x = tensor_space({u, w});
    Piece wedge{{Factor{u, 2, Kind::Ext}, Factor{w, 2, Kind::Ext}}};
    std::vector<El> quadrics;
    for (const auto& e : enumerate_basis(wedge)) quadrics.push_back(det_map(e));
    std::vector<El> cubics;
    for (const auto& f : quadrics)
        for (uint16_t var = 0; var < static_cast<uint16_t>(x.dim); ++var)
            cubics.push_back(multiply_variable(f, var));
    // reduce products to an independent spanning set
    RrefResult rr = rref(coordinate_matrix(cubics));
    Piece p3{{Factor{x, 3, Kind::Sym}}};
    std::vector<El> basis3;
    for (int64_t r = 0; r < rr.rank(); ++r) {
        El e(p3);
        for (const auto& [c, v] : rr.reduced.row(r)) e.add(p3.label_of(c), v);
        basis3.push_back(std::move(e));
    }
    std::map<int, std::vector<El>> degrees;
    degrees[2] = std::move(quadrics);
    degrees[3] = std::move(basis3);
    return GradedIdealSlice(x, std::move(degrees), Provenance::Exact);
}

}  // namespace tsy

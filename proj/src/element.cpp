#include "tsy/element.hpp"

#include <sstream>

namespace tsy {

bool valid_label(const Piece& p, const MultiLabel& l) {
    if (l.size() != p.factors.size()) return false;
    for (size_t f = 0; f < l.size(); ++f) {
        const Factor& fac = p.factors[f];
        if (static_cast<int>(l[f].size()) != fac.power) return false;
        for (size_t i = 0; i < l[f].size(); ++i) {
            if (l[f][i] >= fac.space.dim) return false;
            if (i > 0) {
                if (fac.kind == Kind::Sym && l[f][i - 1] > l[f][i]) return false;
                if (fac.kind == Kind::Ext && l[f][i - 1] >= l[f][i]) return false;
            }
        }
    }
    return true;
}

WeightKey label_weight(const Piece& p, const MultiLabel& l) {
    // Factors over the same space accumulate into one set of coordinates.
    std::vector<std::pair<std::string, WeightKey>> per_space;
    for (size_t f = 0; f < p.factors.size(); ++f) {
        const Space& sp = p.factors[f].space;
        if (!sp.graded()) return {};
        auto it = std::find_if(per_space.begin(), per_space.end(),
                               [&](const auto& e) { return e.first == sp.name; });
        if (it == per_space.end()) {
            per_space.emplace_back(sp.name, WeightKey(sp.weights[0].size(), 0));
            it = per_space.end() - 1;
        }
        for (uint16_t v : l[f]) {
            const WeightKey& w = sp.weights[v];
            for (size_t i = 0; i < w.size(); ++i) it->second[i] += w[i];
        }
    }
    WeightKey out;
    for (const auto& [name, w] : per_space) out.insert(out.end(), w.begin(), w.end());
    return out;
}

El basis_element(const Piece& p, const MultiLabel& l) {
    El e(p);
    if (!valid_label(p, l)) throw std::invalid_argument("invalid basis label");
    e.add(l, Rat(1));
    return e;
}

std::string label_str(const Piece& p, const MultiLabel& l) {
    std::ostringstream os;
    for (size_t f = 0; f < l.size(); ++f) {
        if (f) os << "(x)";
        if (l[f].empty()) {
            os << "1";
            continue;
        }
        const char* sep = p.factors[f].kind == Kind::Ext ? "^" : ".";
        for (size_t i = 0; i < l[f].size(); ++i) {
            if (i) os << sep;
            os << p.factors[f].space.name << l[f][i];
        }
    }
    return os.str();
}

std::string element_str(const El& e) {
    if (e.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, v] : e.terms()) {
        os << (first ? "" : " + ") << rat_str(v) << "*" << label_str(e.piece(), l);
        first = false;
    }
    return os.str();
}

}  // namespace tsy

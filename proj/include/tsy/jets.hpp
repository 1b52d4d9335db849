#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "tsy/element.hpp"
#include "tsy/rng.hpp"

namespace tsy {

struct ChartError : std::runtime_error {
    explicit ChartError(const std::string& m) : std::runtime_error(m) {}
};

// Sparse polynomial with rational coefficients in the chart variables.
struct Poly {
    std::map<std::vector<int>, Rat> terms;  // exponent vector -> coefficient

    static Poly constant(int nvars, Rat c);
    static Poly variable(int nvars, int i);
    Poly operator*(const Poly& o) const;
    Poly derivative(int var) const;
    Poly derivative_multi(const std::vector<int>& alpha) const;
    Rat eval(const RatVec& t) const;
};

// A parametrized variety given by an exact polynomial lifting of a local
// chart; jets are symbolic derivatives evaluated at rational points. The
// ambient space carries the variety's torus grading.
class JetVariety {
public:
    JetVariety(std::string kind, Space ambient, int n, std::vector<Poly> chart);

    const std::string& kind() const { return kind_; }
    const Space& ambient() const { return ambient_; }
    int intrinsic_dim() const { return n_; }

    // d^alpha phi(t); memoized. |t| must equal the intrinsic dimension.
    RatVec jet(const RatVec& t, const std::vector<int>& alpha) const;

    RatVec random_chart_point(Rng& rng, long bound = 10000) const;

    JetVariety renamed(std::string kind) const { return JetVariety(std::move(kind), ambient_, n_, chart_); }

private:
    struct Cache {
        std::map<std::pair<RatVec, std::vector<int>>, RatVec> map;
        std::mutex mu;
    };
    std::string kind_;
    Space ambient_;
    int n_;
    std::vector<Poly> chart_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Built-in varieties.
JetVariety rational_normal_curve(int d);
JetVariety segre_variety(const std::vector<int>& dims);
JetVariety segre_veronese_variety(const std::vector<int>& dims, const std::vector<int>& degs);
JetVariety pencil_product_surface(int a, int b);

struct OsculatingFrame {
    RatVec point;
    int order = 0;
    std::vector<std::vector<int>> alphas;  // degree, then colex within degree
    std::vector<RatVec> vectors;           // one jet per alpha
};

OsculatingFrame osculating_frame(const JetVariety& x, const RatVec& t, int k);

// Random rational point of the affine cone over the q-secant variety of the
// k-osculating variety: a random combination of k-jet frames at q random
// chart points. Rescaled to a primitive integer vector.
RatVec sample_secant_osculating_point(const JetVariety& x, int q, int k, Rng& rng);

// Terracini-style projective dimension estimate: the rank of the tangent
// space to the secant-of-osculating parametrization at a random point
// (the k-jet frames together with randomly weighted order-(k+1) directional
// derivatives), maximized over trials, minus one. A lower bound that is
// exact with high probability.
int dim_estimate(const JetVariety& x, int q, int k, int trials, Rng& rng);

}  // namespace tsy

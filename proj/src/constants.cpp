#include "cotm/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "cotm/exact.hpp"

namespace cotm::hp {

namespace {

// Values are cached per (name, argument, bits); the cache only ever grows
// and entries are copied out under the lock.
class ConstantCache {
public:
    template <typename F>
    Real get(const std::string& name, int arg, mpfr_prec_t bits, F compute) {
        Key key{name, arg, bits};
        {
            std::lock_guard lock(mu_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        Real value = compute();
        std::lock_guard lock(mu_);
        return cache_.emplace(std::move(key), std::move(value)).first->second;
    }

private:
    using Key = std::tuple<std::string, int, mpfr_prec_t>;
    std::mutex mu_;
    std::map<Key, Real> cache_;
};

ConstantCache& cache() {
    static ConstantCache c;
    return c;
}

Real accelerated_eta(int s, Precision p) {
    const int n = eta_terms(p);
    const Precision work = p.widened(5);

    // d = ((3 + sqrt 8)^n + (3 + sqrt 8)^{-n}) / 2
    Real d = pow(Real(3, work) + sqrt(Real(8, work)), n);
    d = (d + 1 / d) / 2;

    Real b(-1, work);
    Real c = -d;
    Real sum(0, work);
    for (int k = 0; k < n; ++k) {
        c = b - c;
        Real term = pow(Real(k + 1, work), -s);
        sum += c * term;
        // b <- b (k + n)(k - n) / ((k + 1/2)(k + 1)), kept in integers
        b *= static_cast<long>(k + n) * static_cast<long>(k - n) * 2;
        b /= static_cast<long>(2 * k + 1) * static_cast<long>(k + 1);
    }
    return sum / d;
}

}  // namespace

Real pi(Precision p) {
    return cache().get("pi", 0, p.bits(), [&] {
        Real r = Real::with_bits(p.bits());
        mpfr_const_pi(r.get(), MPFR_RNDN);
        return r;
    });
}

Real log2(Precision p) {
    return cache().get("log2", 0, p.bits(), [&] {
        Real r = Real::with_bits(p.bits());
        mpfr_const_log2(r.get(), MPFR_RNDN);
        return r;
    });
}

int eta_terms(Precision p) {
    const double rho = 3.0 + std::sqrt(8.0);
    return static_cast<int>(std::ceil((p.digits() + 3) * std::log(10.0) / std::log(rho))) + 3;
}

Real eta(int s, Precision p) {
    if (s < 1) throw std::domain_error("eta: argument must be a positive integer");
    return cache().get("eta", s, p.bits(), [&] {
        return round_to(accelerated_eta(s, p), p);
    });
}

Real zeta(int s, Precision p) {
    if (s < 2) throw std::domain_error("zeta: argument must be an integer >= 2");
    const Precision work = p.widened(2);
    Real factor = 1 - ldexp(Real(1, work), 1 - s);
    return round_to(eta(s, work) / factor, p);
}

Real zeta_even_closed_form(int l, Precision p) {
    if (l < 1) throw std::domain_error("zeta_even_closed_form: l must be >= 1");
    const Precision work = p.widened(2);
    mpq_class coeff = abs(exact::bernoulli(2 * l)) / (2 * exact::factorial(2 * l));
    return round_to(pow(2 * pi(work), 2 * l) * Real(coeff, work), p);
}

}  // namespace cotm::hp

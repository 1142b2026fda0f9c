#include "peakalg/cyclo.hpp"

#include <functional>
#include <sstream>

namespace peakalg {

int euler_phi(int r) {
    if (r < 1) throw std::invalid_argument("euler_phi of nonpositive argument");
    int result = r, m = r;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

polyq::Poly x_pow_minus_one(int r) {
    polyq::Poly p(r + 1, Rational(0));
    p[0] = -1;
    p[r] = 1;
    return p;
}

} // namespace

// Phi_r = (x^r - 1) / prod_{d | r, d < r} Phi_d, cached per order.
const polyq::Poly &cyclotomic_polynomial(int r) {
    static std::map<int, polyq::Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;

    std::function<const polyq::Poly &(int)> get = [&](int k) -> const polyq::Poly & {
        auto jt = cache.find(k);
        if (jt != cache.end()) return jt->second;
        polyq::Poly num = x_pow_minus_one(k);
        for (int d = 1; d < k; ++d)
            if (k % d == 0) num = polyq::divexact(num, get(d));
        return cache.emplace(k, std::move(num)).first->second;
    };
    return get(r);
}

std::vector<Rational> Cyclo::reduce(int order, std::vector<Rational> poly) {
    const polyq::Poly &phi = cyclotomic_polynomial(order);
    polyq::Poly rem = polyq::mod(std::move(poly), phi);
    rem.resize(euler_phi(order), Rational(0));
    return rem;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) {
        Cyclo r(order_);
        r.coeffs_[0] = peakalg::inverse(coeffs_[0]);
        return r;
    }
    // Extended Euclid in Q[x] against Phi_r: s*a + t*Phi = gcd (a unit here).
    polyq::Poly a = coeffs_trimmed();
    polyq::Poly b = cyclotomic_polynomial(order_);
    polyq::Poly s0{Rational(1)}, s1{};
    polyq::Poly r0 = a, r1 = b;
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        polyq::Poly q;
        {
            polyq::Poly rem = r0;
            q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rational(0));
            while (rem.size() >= r1.size()) {
                Rational c = rem.back() / r1.back();
                size_t shift = rem.size() - r1.size();
                q[shift] += c;
                for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
                polyq::trim(rem);
            }
            r0 = std::move(rem);
        }
        std::swap(r0, r1);
        // s2 = s0 - q*s1
        polyq::Poly qs = polyq::mul(q, s1);
        polyq::Poly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        polyq::trim(s2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("element not invertible modulo Phi_r");
    Rational lead = peakalg::inverse(r0[0]);
    for (auto &c : s0) c *= lead;
    return Cyclo(order_, std::move(s0));
}

Cyclo Cyclo::pow(long e) const {
    Cyclo base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Cyclo result = FieldTraits<Cyclo>::one();
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string to_string(const Cyclo &x) {
    if (x.is_rational()) return to_string(x.rational_part());
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < x.degree(); ++i) {
        const Rational &c = x.coeffs()[i];
        if (is_zero(c)) continue;
        if (!first) os << (sgn(c) > 0 ? "+" : "");
        if (i == 0) {
            os << to_string(c);
        } else {
            if (c == 1) {
            } else if (c == -1) {
                os << "-";
            } else {
                os << to_string(c) << "*";
            }
            os << "q";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// Inverse of to_string: a sum of terms c, c*q, c*q^k, q, -q^k.
Cyclo cyclo_from_string(int order, const std::string &s) {
    std::vector<Rational> coeffs(std::max(2, euler_phi(order)), Rational(0));
    size_t i = 0;
    auto fail = [&] { throw std::invalid_argument("bad cyclotomic literal: " + s); };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') ++i;
        else if (s[i] == '-') { sign = -1; ++i; }
        std::string num;
        while (i < s.size() && (isdigit(s[i]) || s[i] == '/')) num.push_back(s[i++]);
        Rational c = num.empty() ? Rational(1) : rational_from_string(num);
        if (sign < 0) c = -c;
        if (i < s.size() && s[i] == '*') ++i;
        int deg = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string d;
                while (i < s.size() && isdigit(s[i])) d.push_back(s[i++]);
                if (d.empty()) fail();
                deg = std::stoi(d);
            }
        } else if (num.empty()) {
            fail();
        }
        if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] += c;
    }
    return Cyclo(order, std::move(coeffs));
}

} // namespace peakalg

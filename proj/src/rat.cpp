#include "polysq/rat.hpp"

#include <cmath>
#include <stdexcept>

namespace polysq {

Rat::Rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(n) / mpq_class(d);  // operator/ canonicalizes
}

Rat Rat::from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("Rat: non-finite double");
    Rat r;
    mpq_set_d(r.v_.get_mpq_t(), x);  // exact binary-fraction conversion
    return r;
}

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rat: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpz_class n, d;
        if (n.set_str(text.substr(0, slash), 10) != 0 || d.set_str(text.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("Rat: bad fraction '" + text + "'");
        return Rat(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        auto epos = text.find_first_of("eE");
        if (epos == std::string::npos) {
            mpz_class n;
            if (n.set_str(text, 10) != 0) throw std::invalid_argument("Rat: bad integer '" + text + "'");
            return Rat(n);
        }
    }
    // Decimal or scientific notation: parse mantissa digits exactly.
    std::string digits;
    long exp10 = 0;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
    bool any = false;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) { digits += text[i]; any = true; }
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) { digits += text[i]; --exp10; any = true; }
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        exp10 += std::stol(text.substr(i + 1));
        i = text.size();
    }
    if (!any || i != text.size()) throw std::invalid_argument("Rat: bad number '" + text + "'");
    mpz_class n;
    if (digits.empty() || n.set_str(digits, 10) != 0) throw std::invalid_argument("Rat: bad number '" + text + "'");
    if (neg) n = -n;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    return exp10 < 0 ? Rat(n, p10) : Rat(n * p10);
}

std::string Rat::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

std::int64_t Rat::to_int64() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::overflow_error("Rat: value not an int64 integer: " + str());
    return v_.get_num().get_si();
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rat Rat::abs() const {
    Rat r = *this;
    r.v_ = ::abs(r.v_);
    return r;
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.v_ = -r.v_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.v_ == 0) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

RrefResult rref(const RatMatrix& m) {
    RrefResult out{m, {}};
    RatMatrix& a = out.matrix;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && a.at(piv, col).sign() == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(lead, c));
        Rat inv = Rat(1) / a.at(lead, col);
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(lead, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, col).sign() == 0) continue;
            Rat f = a.at(r, col);
            for (std::size_t c = 0; c < a.cols(); ++c) a.at(r, c) -= f * a.at(lead, c);
        }
        out.pivots.push_back(col);
        ++lead;
    }
    return out;
}

std::vector<std::vector<Rat>> nullspace_basis(const RatMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(m.cols());
        v[free_col] = Rat(1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.matrix.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat best_rational_approx(const Rat& x, std::uint64_t qmax) {
    if (qmax < 1) throw std::invalid_argument("best_rational_approx: qmax must be >= 1");
    mpz_class qm(static_cast<unsigned long>(qmax));

    // Shift into [0,1): approximating the fractional part under the same
    // denominator bound is equivalent, and the integer shift keeps ties intact.
    mpz_class shift = x.floor();
    Rat y = x - Rat(shift);

    mpz_class best_p = 0, best_q = 1;
    Rat best_err = y.abs();
    auto consider = [&](const mpz_class& p_raw, const mpz_class& q_raw) {
        if (q_raw < 1 || q_raw > qm) return;
        mpz_class g = gcd(p_raw, q_raw);
        if (g == 0) g = 1;
        mpz_class p = p_raw / g, q = q_raw / g;
        Rat err = (y - Rat(p, q)).abs();
        if (err != best_err ? err < best_err : (q != best_q ? q < best_q : p < best_p)) {
            best_p = p;
            best_q = q;
            best_err = err;
        }
    };

    // Continued-fraction convergents of y (batched Stern-Brocot descent),
    // capped at denominator qm; the last convergent and the deepest
    // semiconvergent inside the bound are the classical candidates.
    {
        mpz_class num = y.num(), den = y.den();
        mpz_class p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // p1/q1 = first convergent 0/1
        while (den != 0) {
            mpz_class a = num / den;
            mpz_class r = num - a * den;
            mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
            if (q2 > qm) {
                // deepest semiconvergent p0 + j*p1 over q0 + j*q1 with q <= qm
                mpz_class j = (qm - q0) / q1;
                consider(p0 + j * p1, q0 + j * q1);
                break;
            }
            consider(p2, q2);
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            num = den; den = r;
        }
    }

    // Exhaustive sweep over the last denominator band (the whole range when
    // qmax is small) settles optimality under the tie rule.
    std::uint64_t band = qmax > 4096 ? 4096 : qmax;
    for (std::uint64_t k = 1; k <= band; ++k) {
        mpz_class q(static_cast<unsigned long>(qmax - band + k));
        mpz_class fl;
        mpz_class yq = y.num() * q;
        mpz_fdiv_q(fl.get_mpz_t(), yq.get_mpz_t(), y.den().get_mpz_t());
        consider(fl, q);
        consider(fl + 1, q);
    }

    return Rat(best_p + shift * best_q, best_q);
}

Rat best_rational_approx(double x, std::uint64_t qmax) {
    return best_rational_approx(Rat::from_double(x), qmax);
}

}  // namespace polysq

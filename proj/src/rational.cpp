#include "oscdirac/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace oscdirac {

namespace {

std::int64_t checked_cast(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
    return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_reduced(__int128 n, __int128 d, const char* what) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num = checked_cast(n, what);
    r.den = checked_cast(d, what);
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) { *this = make_reduced(n, d, "rational: construction overflow"); }

Rational operator+(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                        static_cast<__int128>(a.den) * b.den, "rational: addition overflow");
}

Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num, b.den); }

Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den,
                        "rational: multiplication overflow");
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("rational: division by zero");
    return make_reduced(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num,
                        "rational: division overflow");
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

ScalarInput ScalarInput::from_surd(const Rational& r, std::int64_t radicand) {
    if (radicand < 1) throw std::invalid_argument("surd: radicand must be positive");
    ScalarInput s;
    s.coef = r;
    s.radicand = radicand;
    s.value = r.value() * std::sqrt(static_cast<double>(radicand));
    if (radicand == 1) s.value = r.value();
    return s;
}

namespace {

bool parse_int64(const std::string& s, std::int64_t& out) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(s, &pos);
    } catch (...) {
        return false;
    }
    return pos == s.size();
}

// "p" or "p/q"
bool parse_rational_token(const std::string& s, Rational& out) {
    auto slash = s.find('/');
    std::int64_t n = 0, d = 1;
    if (slash == std::string::npos) {
        if (!parse_int64(s, n)) return false;
    } else {
        if (!parse_int64(s.substr(0, slash), n)) return false;
        if (!parse_int64(s.substr(slash + 1), d)) return false;
        if (d == 0) return false;
    }
    out = Rational(n, d);
    return true;
}

}  // namespace

ScalarInput parse_scalar(const std::string& token) {
    std::string s = token;
    bool negate = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negate = (s[0] == '-');
        s = s.substr(1);
    }
    auto finish = [&](ScalarInput in) {
        if (negate) {
            in.value = -in.value;
            if (in.coef) in.coef = -*in.coef;
        }
        return in;
    };

    auto star = s.find('*');
    std::string head = (star == std::string::npos) ? s : s.substr(0, star);
    std::string tail = (star == std::string::npos) ? std::string() : s.substr(star + 1);

    auto parse_sqrt = [](const std::string& t, std::int64_t& rad) {
        if (t.rfind("sqrt", 0) != 0) return false;
        if (!parse_int64(t.substr(4), rad)) return false;
        return rad >= 1;
    };

    std::int64_t rad = 1;
    Rational coef(1);
    if (star != std::string::npos) {
        if (!parse_rational_token(head, coef) || !parse_sqrt(tail, rad))
            throw std::invalid_argument("cannot parse scalar token: " + token);
        return finish(ScalarInput::from_surd(coef, rad));
    }
    if (parse_sqrt(head, rad)) return finish(ScalarInput::from_surd(Rational(1), rad));
    if (parse_rational_token(head, coef)) return finish(ScalarInput::from_rational(coef));

    // plain float fallback
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return finish(ScalarInput::from_double(v));
    } catch (...) {
        throw std::invalid_argument("cannot parse scalar token: " + token);
    }
}

bool is_perfect_square(std::int64_t n) {
    if (n < 0) return false;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c)
        if (c * c == n) return true;
    return false;
}

std::vector<Convergent> sqrt_convergents(std::int64_t radicand, int count) {
    if (radicand < 2 || is_perfect_square(radicand))
        throw std::invalid_argument("sqrt_convergents: radicand must be a non-square integer >= 2");
    // Standard periodic continued fraction of sqrt(N):
    //   m_{k+1} = d_k a_k - m_k,  d_{k+1} = (N - m_{k+1}^2)/d_k,
    //   a_{k+1} = floor((a_0 + m_{k+1})/d_{k+1}).
    std::int64_t a0 = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(radicand))));
    while ((a0 + 1) * (a0 + 1) <= radicand) ++a0;
    while (a0 * a0 > radicand) --a0;

    std::vector<Convergent> out;
    __int128 pm1 = 1, pm2 = 0;  // p_{k-1}, p_{k-2}
    __int128 qm1 = 0, qm2 = 1;
    std::int64_t m = 0, d = 1, a = a0;
    for (int k = 0; k < count; ++k) {
        __int128 p = static_cast<__int128>(a) * pm1 + pm2;
        __int128 q = static_cast<__int128>(a) * qm1 + qm2;
        if (p > INT64_MAX || q > INT64_MAX) throw std::overflow_error("sqrt_convergents: overflow");
        out.push_back({static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)});
        pm2 = pm1;
        pm1 = p;
        qm2 = qm1;
        qm1 = q;
        m = d * a - m;
        d = (radicand - m * m) / d;
        a = (a0 + m) / d;
    }
    return out;
}

std::vector<Convergent> double_convergents(double x, int count) {
    std::vector<Convergent> out;
    __int128 pm1 = 1, pm2 = 0;
    __int128 qm1 = 0, qm2 = 1;
    double rem = x;
    for (int k = 0; k < count; ++k) {
        double fl = std::floor(rem);
        if (fl > 9.0e17 || fl < -9.0e17) break;
        auto a = static_cast<std::int64_t>(fl);
        __int128 p = static_cast<__int128>(a) * pm1 + pm2;
        __int128 q = static_cast<__int128>(a) * qm1 + qm2;
        if (p > INT64_MAX || p < INT64_MIN || q > INT64_MAX) break;
        out.push_back({static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)});
        pm2 = pm1;
        pm1 = p;
        qm2 = qm1;
        qm1 = q;
        double frac = rem - fl;
        if (frac < 1e-12) break;  // effectively rational at double precision
        rem = 1.0 / frac;
    }
    return out;
}

}  // namespace oscdirac

#include "qloop/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qloop {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(long n) {
    if (n != 0) coeff_.push_back(mpz_class(n));
}

IntPoly::IntPoly(const mpz_class& n) {
    if (n != 0) coeff_.push_back(n);
}

IntPoly IntPoly::monomial(const mpz_class& coef, int exp) {
    IntPoly p;
    if (coef != 0) {
        p.coeff_.assign(exp + 1, kZero);
        p.coeff_[exp] = coef;
    }
    return p;
}

bool IntPoly::is_one() const { return coeff_.size() == 1 && coeff_[0] == 1; }

const mpz_class& IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeff_.size())) return kZero;
    return coeff_[k];
}

const mpz_class& IntPoly::leading() const {
    if (is_zero()) return kZero;
    return coeff_.back();
}

void IntPoly::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

void IntPoly::set_coeff(int k, const mpz_class& val) {
    if (k >= static_cast<int>(coeff_.size())) {
        if (val == 0) return;
        coeff_.resize(k + 1, kZero);
    }
    coeff_[k] = val;
    trim();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.coeff_.resize(std::max(coeff_.size(), o.coeff_.size()), kZero);
    for (size_t k = 0; k < r.coeff_.size(); ++k)
        r.coeff_[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.coeff_.resize(std::max(coeff_.size(), o.coeff_.size()), kZero);
    for (size_t k = 0; k < r.coeff_.size(); ++k)
        r.coeff_[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, kZero);
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (size_t j = 0; j < o.coeff_.size(); ++j)
            r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

std::strong_ordering IntPoly::operator<=>(const IntPoly& o) const {
    if (coeff_.size() != o.coeff_.size())
        return coeff_.size() <=> o.coeff_.size();
    for (size_t k = coeff_.size(); k-- > 0;) {
        int c = cmp(coeff_[k], o.coeff_[k]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return IntPoly();
    IntPoly r;
    r.coeff_.assign(coeff_.size() + k, kZero);
    for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i + k] = coeff_[i];
    return r;
}

IntPoly IntPoly::reversed() const {
    IntPoly r = *this;
    std::reverse(r.coeff_.begin(), r.coeff_.end());
    r.trim();
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r(1), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

IntPoly IntPoly::div_exact(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("IntPoly: division by zero");
    if (is_zero()) return IntPoly();
    IntPoly rem = *this, quot;
    quot.coeff_.assign(coeff_.size(), kZero);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(),
                    d.leading().get_mpz_t());
        if (r != 0) throw std::domain_error("IntPoly: inexact division");
        int shift = rem.degree() - d.degree();
        quot.coeff_[shift] = q;
        rem = rem - d.shifted(shift) * IntPoly(q);
    }
    if (!rem.is_zero()) throw std::domain_error("IntPoly: inexact division");
    quot.trim();
    return quot;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeff_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

namespace {

// Pseudo-remainder: lc(d)^(deg n - deg d + 1) * n = q*d + r.
IntPoly pseudo_rem(IntPoly n, const IntPoly& d) {
    int steps = n.degree() - d.degree() + 1;
    const IntPoly lead(d.leading());
    while (!n.is_zero() && n.degree() >= d.degree()) {
        int shift = n.degree() - d.degree();
        IntPoly t = d.shifted(shift) * IntPoly(n.leading());
        n = n * lead - t;
        --steps;
    }
    if (steps > 0) n = n * lead.pow(static_cast<unsigned>(steps));
    return n;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;

    mpz_class ca = a.content(), cb = b.content(), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

    // Primitive PRS on the primitive parts; sizes here stay small.
    IntPoly p = a.div_exact(IntPoly(ca));
    IntPoly q = b.div_exact(IntPoly(cb));
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
        IntPoly r = pseudo_rem(p, q);
        if (!r.is_zero()) r = r.div_exact(IntPoly(r.content()));
        p = q;
        q = r;
    }
    if (p.leading() < 0) p = -p;
    return p * IntPoly(cg);
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const mpz_class& c = p.coeff(k);
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "v";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

Scalar::Scalar(const mpq_class& q) : num_(q.get_num()), den_(q.get_den()) { normalize(); }

Scalar Scalar::v_power(long k) {
    Scalar s;
    if (k >= 0) {
        s.num_ = IntPoly::monomial(1, static_cast<int>(k));
        s.den_ = IntPoly(1);
    } else {
        s.num_ = IntPoly(1);
        s.den_ = IntPoly::monomial(1, static_cast<int>(-k));
    }
    return s;
}

Scalar Scalar::from_fraction(IntPoly num, IntPoly den) {
    if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
    Scalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    return from_fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return from_fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return from_fraction(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    return from_fraction(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return from_fraction(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Scalar Scalar::bar() const {
    // p(v)/q(v) -> p(1/v)/q(1/v) = v^(deg q - deg p) * rev(p)/rev(q).
    if (is_zero()) return Scalar();
    int dn = num_.degree(), dd = den_.degree();
    IntPoly n = num_.reversed(), d = den_.reversed();
    if (dd >= dn)
        n = n.shifted(dd - dn);
    else
        d = d.shifted(dn - dd);
    return from_fraction(std::move(n), std::move(d));
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    auto c = num_ <=> o.num_;
    if (c != std::strong_ordering::equal) return c;
    return den_ <=> o.den_;
}

std::string Scalar::to_string() const {
    if (den_.is_one()) return qloop::to_string(num_);
    return "(" + qloop::to_string(num_) + ")/(" + qloop::to_string(den_) + ")";
}

namespace {

struct ScalarParser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("scalar parse error at position " + std::to_string(pos) +
                                    ": " + msg);
    }
    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        long val = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            val = val * 10 + (text[pos] - '0');
            ++pos;
        }
        return neg ? -val : val;
    }

    Scalar parse_expr() {
        Scalar acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc += parse_term();
            } else if (c == '-') {
                ++pos;
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Scalar parse_term() {
        Scalar acc = parse_unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc *= parse_unary();
            } else if (c == '/') {
                ++pos;
                acc /= parse_unary();
            } else {
                return acc;
            }
        }
    }

    Scalar parse_unary() {
        if (peek() == '-') {
            ++pos;
            return -parse_unary();
        }
        if (peek() == '+') {
            ++pos;
            return parse_unary();
        }
        return parse_power();
    }

    Scalar parse_power() {
        Scalar base = parse_atom();
        if (peek() == '^') {
            ++pos;
            long e = parse_int();
            return base.pow(e);
        }
        return base;
    }

    Scalar parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Scalar inner = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (c == 'v') {
            ++pos;
            return Scalar::v_power(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class val = 0;
            skip_ws();
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                val = val * 10 + (text[pos] - '0');
                ++pos;
            }
            return Scalar(val);
        }
        fail("unexpected character");
    }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    ScalarParser p{text};
    Scalar s = p.parse_expr();
    if (!p.eof()) p.fail("trailing input");
    return s;
}

mpq_class SeriesWindow::coeff(int k) const {
    auto it = coefficients.find(k);
    return it == coefficients.end() ? mpq_class(0) : it->second;
}

SeriesWindow expand_series(const Scalar& s, int order) {
    SeriesWindow w;
    w.low_order = order;
    if (s.is_zero()) return w;

    // Substitute u = 1/v: s = u^(dq-dp) * rev(num)(u)/rev(den)(u), where
    // rev(den)(0) = lc(den) != 0, so the power-series division always works.
    const int dp = s.num().degree(), dq = s.den().degree();
    IntPoly rn = s.num().reversed(), rd = s.den().reversed();
    const int terms = dp - dq + order;  // u-exponent j contributes v^(dp-dq-j)
    if (terms < 0) return w;

    std::vector<mpq_class> series(terms + 1);
    const mpq_class lead(rd.coeff(0));
    for (int j = 0; j <= terms; ++j) {
        mpq_class acc(rn.coeff(j));
        for (int k = 1; k <= j; ++k) acc -= mpq_class(rd.coeff(k)) * series[j - k];
        series[j] = acc / lead;
        series[j].canonicalize();
        if (series[j] != 0) w.coefficients[dp - dq - j] = series[j];
    }
    return w;
}

bool in_vinv_nat(const Scalar& s, int order) {
    SeriesWindow w = expand_series(s, order);
    for (const auto& [exp, coef] : w.coefficients) {
        if (exp >= 0) return false;
        if (coef.get_den() != 1 || coef < 0) return false;
    }
    return true;
}

bool in_one_plus_vinv_nat(const Scalar& s, int order) {
    SeriesWindow w = expand_series(s, order);
    for (const auto& [exp, coef] : w.coefficients) {
        if (exp > 0) return false;
        if (exp == 0) {
            if (coef != 1) return false;
        } else {
            if (coef.get_den() != 1 || coef < 0) return false;
        }
    }
    return w.coeff(0) == 1;
}

}  // namespace qloop

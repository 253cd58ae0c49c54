#include "cmvf/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cmvf {

Polynomial Polynomial::monomial(int degree, std::int64_t coeff) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coeff;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::one_plus_t() { return Polynomial({1, 1}); }

bool Polynomial::nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v >= 0; });
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

bool Polynomial::divide_by_one_plus_t(Polynomial& quotient) const {
    // Synthetic division: p(t) = (1+t) q(t) + r with r constant in each step.
    std::vector<std::int64_t> rem = c_;
    std::vector<std::int64_t> q(rem.size(), 0);
    for (int d = static_cast<int>(rem.size()) - 1; d >= 1; --d) {
        q[d - 1] = rem[d];
        rem[d - 1] -= rem[d];
        rem[d] = 0;
    }
    if (!rem.empty() && rem[0] != 0) return false;
    quotient = Polynomial(std::move(q));
    return true;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = 0; d <= degree(); ++d) {
        std::int64_t a = c_[d];
        if (a == 0) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a) + "*";
            out += d == 1 ? "t" : "t^" + std::to_string(d);
        }
    }
    return out;
}

Polynomial Polynomial::parse(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto fail = [&]() -> Polynomial { throw std::invalid_argument("bad polynomial: '" + text + "'"); };

    skip_ws();
    if (pos >= text.size()) fail();
    std::vector<std::int64_t> coeffs;
    auto add = [&](int deg, std::int64_t a) {
        if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(deg) + 1, 0);
        coeffs[static_cast<std::size_t>(deg)] += a;
    };

    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) {
            if (first) fail();
            break;
        }
        if (!first) {
            if (text[pos] != '+') fail();
            ++pos;
            skip_ws();
        }
        std::int64_t a = 1;
        bool have_num = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t used = 0;
            a = std::stoll(text.substr(pos), &used);
            pos += used;
            have_num = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            if (!have_num) fail();
            ++pos;
            skip_ws();
        }
        int deg = 0;
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            deg = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
                std::size_t used = 0;
                deg = static_cast<int>(std::stoll(text.substr(pos), &used));
                pos += used;
            }
        } else if (!have_num) {
            fail();
        }
        add(deg, a);
        first = false;
        skip_ws();
        if (pos >= text.size()) break;
    }
    return Polynomial(std::move(coeffs));
}

} // namespace cmvf

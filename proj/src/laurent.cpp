#include "mvlab/laurent.hpp"

#include <sstream>

#include "mvlab/error.hpp"

namespace mvlab {

LaurentT::LaurentT(const BigRat& constant)
{
    add_term(0, constant);
}

LaurentT LaurentT::monomial(int exponent, const BigRat& coeff)
{
    LaurentT p;
    p.add_term(exponent, coeff);
    return p;
}

BigRat LaurentT::coeff(int exponent) const
{
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? BigRat(0) : it->second;
}

int LaurentT::min_exponent() const
{
    if (terms_.empty()) {
        throw domain_error("zero Laurent polynomial has no exponents");
    }
    return terms_.begin()->first;
}

int LaurentT::max_exponent() const
{
    if (terms_.empty()) {
        throw domain_error("zero Laurent polynomial has no exponents");
    }
    return terms_.rbegin()->first;
}

void LaurentT::add_term(int exponent, const BigRat& c)
{
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

LaurentT& LaurentT::operator+=(const LaurentT& rhs)
{
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentT& LaurentT::operator-=(const LaurentT& rhs)
{
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentT operator*(const LaurentT& a, const LaurentT& b)
{
    LaurentT r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(ea + eb, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(r.terms_, [](const auto& t) { return sgn(t.second) == 0; });
    return r;
}

LaurentT& LaurentT::operator*=(const LaurentT& rhs)
{
    *this = *this * rhs;
    return *this;
}

LaurentT& LaurentT::operator*=(const BigRat& k)
{
    if (sgn(k) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= k;
    }
    return *this;
}

LaurentT LaurentT::operator-() const
{
    LaurentT r(*this);
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

LaurentT LaurentT::shifted(int s) const
{
    LaurentT r;
    for (const auto& [e, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e + s, c);
    }
    return r;
}

BigRat LaurentT::at_one() const
{
    BigRat s = 0;
    for (const auto& [e, c] : terms_) {
        s += c;
    }
    return s;
}

std::string LaurentT::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << c.get_str();
        if (e != 0) {
            os << "*T^" << e;
        }
    }
    return os.str();
}

LaurentT laurent_dt(const LaurentT& p, unsigned k)
{
    LaurentT cur = p;
    for (unsigned i = 0; i < k; ++i) {
        LaurentT next;
        for (const auto& [e, c] : cur.terms()) {
            if (e != 0) {
                next.add_term(e - 2, BigRat(-e) * c);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

LaurentT x_in_T()
{
    LaurentT x(make_rat(1, 2));
    x.add_term(2, make_rat(-1, 2));
    return x;
}

LaurentT derivative(const GenusBlock& h)
{
    LaurentT d = laurent_dt(h.laurent, 1);
    d.add_term(-2, h.log_coeff);
    return d;
}

} // namespace mvlab

#include "nlg/analytic.hpp"

#include <stdexcept>

namespace nlg {

namespace {

void check_domain(const Rat& x, const Rat& lo, const Rat& hi, const char* what) {
    if (x < lo || x > hi) throw std::domain_error(std::string(what) + ": argument out of domain");
}

}  // namespace

Rat theorem1(const Rat& x, GameRelation rel) {
    check_domain(x, rat(0), rat(1), "theorem1");
    switch (rel) {
        case GameRelation::Equivalent:
            return x;
        case GameRelation::TriviallyComplementary:
            return 1 - x;
        case GameRelation::Distinct:
            return x <= rat(1, 2) ? Rat(x + rat(1, 2)) : Rat(rat(3, 2) - x);
    }
    throw std::logic_error("theorem1: bad relation");
}

Rat theorem2(const Rat& x) {
    check_domain(x, rat(1, 2), rat(1), "theorem2");
    return x <= rat(3, 4) ? Rat(1) : (5 - 4 * x) / 2;
}

Rat theorem2_extended(const Rat& x) {
    check_domain(x, rat(0), rat(1), "theorem2_extended");
    return x < rat(1, 2) ? theorem2(1 - x) : theorem2(x);
}

Rat marginal_vs_marginal(const Rat& x, GameRelation rel) { return theorem1(x, rel); }

Rat sn_vs_marginal(const Rat& p) {
    check_domain(p, rat(0), rat(1), "sn_vs_marginal");
    return p <= rat(1, 2) ? Rat((3 + 2 * p) / 4) : Rat((5 - 2 * p) / 4);
}

Rat ClosedForm::operator()(const Rat& x) const {
    check_domain(x, domain_lo, domain_hi, "ClosedForm");
    switch (kind) {
        case ClosedFormKind::SnVsSn:
            return theorem1(x, relation);
        case ClosedFormKind::MarginalVsMarginal:
            return marginal_vs_marginal(x, relation);
        case ClosedFormKind::SnVsMarginal:
            return sn_vs_marginal(x);
        case ClosedFormKind::SnVsSk:
            return theorem2(x);
    }
    throw std::logic_error("ClosedForm: bad kind");
}

std::vector<Rat> ClosedForm::breakpoints() const {
    switch (kind) {
        case ClosedFormKind::SnVsSn:
        case ClosedFormKind::MarginalVsMarginal:
            return relation == GameRelation::Distinct ? std::vector<Rat>{rat(1, 2)}
                                                      : std::vector<Rat>{};
        case ClosedFormKind::SnVsMarginal:
            return {rat(1, 2)};
        case ClosedFormKind::SnVsSk:
            return {rat(3, 4)};
    }
    throw std::logic_error("ClosedForm: bad kind");
}

ClosedForm closed_form_sn_vs_sn(GameRelation rel) {
    return ClosedForm{ClosedFormKind::SnVsSn, rel, rat(0), rat(1)};
}

ClosedForm closed_form_marginal_vs_marginal(GameRelation rel) {
    return ClosedForm{ClosedFormKind::MarginalVsMarginal, rel, rat(0), rat(1)};
}

ClosedForm closed_form_sn_vs_marginal() {
    return ClosedForm{ClosedFormKind::SnVsMarginal, GameRelation::Distinct, rat(0), rat(1)};
}

ClosedForm closed_form_sn_vs_sk() {
    return ClosedForm{ClosedFormKind::SnVsSk, GameRelation::Distinct, rat(1, 2), rat(1)};
}

}  // namespace nlg

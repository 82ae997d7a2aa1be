#include "chazy/systems.hpp"

#include "chazy/theorem2.hpp"

namespace chazy {

SystemSpec SystemSpec::ramanujan() {
    SystemSpec s;
    s.kind_ = Kind::Ramanujan;
    s.name_ = "ramanujan";
    return s;
}

SystemSpec SystemSpec::gen_chazy(const Rational& k) {
    GenChazyParam p(k);  // validates k != 6
    SystemSpec s;
    s.kind_ = Kind::GenChazy;
    s.name_ = "genchazy:" + to_string(k);
    s.gen_coeff_ = p.coeff_d();
    return s;
}

SystemSpec SystemSpec::darboux_halphen() {
    SystemSpec s;
    s.kind_ = Kind::DarbouxHalphen;
    s.name_ = "dh";
    return s;
}

SystemSpec SystemSpec::symmetric_dh32(double cross_weight) {
    SystemSpec s;
    s.kind_ = Kind::SymmetricDH32;
    s.name_ = "dh32";
    s.cross_weight_ = cross_weight;
    return s;
}

SystemSpec SystemSpec::schwarz_triangle(const SchwarzProfile& profile) {
    SystemSpec s;
    s.kind_ = Kind::SchwarzTriangle;
    s.name_ = "schwarz:" + profile.name;
    s.profile_ = profile;
    return s;
}

}  // namespace chazy

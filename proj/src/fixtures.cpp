#include "ramify/fixtures.hpp"

namespace ramify {

EisensteinPoly fixture_2adic_deg4(int precision) {
    BaseFieldConfig cfg{2, Backend::char_zero, 1, precision};
    std::vector<FieldElement> c{
        FieldElement::from_integer(cfg, 0),
        FieldElement::from_integer(cfg, 6),
        FieldElement::from_integer(cfg, -4),
        FieldElement::from_integer(cfg, 2),
    };
    return EisensteinPoly(cfg, std::move(c));
}

EisensteinPoly fixture_3adic_deg9(int precision) {
    BaseFieldConfig cfg{3, Backend::char_zero, 2, precision};
    FieldElement pi = FieldElement::uniformizer(cfg);
    std::vector<FieldElement> c(9, FieldElement::zero(cfg));
    c[1] = pi * pi;           // c_2
    c[5] = pi * pi;           // c_6
    c[7] = pi * pi * pi;      // c_8
    c[8] = pi;                // c_9
    return EisensteinPoly(cfg, std::move(c));
}

std::optional<EisensteinPoly> fixture_by_name(const std::string& name, int precision) {
    if (name == "2adic-deg4") return fixture_2adic_deg4(precision);
    if (name == "3adic-deg9") return fixture_3adic_deg9(precision);
    return std::nullopt;
}

std::vector<std::string> fixture_names() { return {"2adic-deg4", "3adic-deg9"}; }

}  // namespace ramify

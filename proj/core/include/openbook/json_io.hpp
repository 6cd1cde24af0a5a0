#pragma once

#include <string>

#include "openbook/cone.hpp"
#include "openbook/graph.hpp"
#include "openbook/invariants.hpp"
#include "openbook/verify.hpp"

namespace openbook {

// Machine-readable renderings of the report types. Each function returns one
// complete JSON document (no trailing newline). Keys are stable; integer
// values are JSON numbers, exact rationals are "p/q" strings.

std::string validation_json(const GraphValidation& v);
std::string zmin_json(const Cycle& zmin);
std::string canonical_json(const RationalCycle& k);
std::string chi_json(const Cycle& d, const Int& chi);
std::string open_book_json(const OpenBookReport& r);
std::string contact_json(const ContactReport& r);
std::string enumeration_json(const ConeEnumeration& e);
std::string stratum_json(int bound, const Int& genus, const std::vector<Cycle>& elements);
std::string verification_json(const VerificationReport& r);

}  // namespace openbook

#pragma once

#include <string>

#include "json.hpp"

#include "ctkit/connected.hpp"
#include "ctkit/entail.hpp"
#include "ctkit/generator.hpp"
#include "ctkit/induce.hpp"
#include "ctkit/subsume.hpp"
#include "ctkit/term.hpp"

namespace ctkit {

/// Insertion-ordered JSON keeps output byte-stable across runs.
using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "ctkit.v1";

ordered_json json_of(const Theory& t);
ordered_json json_of(const Substitution& s);
ordered_json json_of(const LeastModel& m);
ordered_json json_of(const LayeredTheory& lt);
ordered_json json_of(const VerificationReport& r);
ordered_json json_of(const OpenProgram& p);
ordered_json json_of(const CtisWitness& w);
ordered_json json_of(const GeneratedInstance& inst);

}  // namespace ctkit

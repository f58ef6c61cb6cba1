#pragma once

#include <string>

#include <json.hpp>

#include "arquiver/arcomp.hpp"
#include "arquiver/ramify.hpp"

namespace arq {

struct RunConfig {
    std::string command;  // char-table | mckay | separated | ar-component | tubes | check
    GroupSchemeSpec spec;
    long l = 0;
    int seed = 0;
    long nu_min = -3;
    long nu_max = 3;
    std::string format = "json";  // json | dot | text
    std::string out;              // empty = stdout
    bool p_defaulted = false;
    bool r_defaulted = false;
};

// exit codes: 0 success, 2 usage, 3 spec validation, 4 internal invariant
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSpec = 3;
inline constexpr int kExitInternal = 4;

/// The fusion datum for a spec: character-theoretic for reduced groups
/// (r = 1), weight-combinatorial otherwise.
FusionDatum fusion_for(const GroupSchemeSpec& spec);

/// The affine type predicted by the classification: A~(2np^{r-1}-1) for
/// cyclic, D~(np^{r-1}+2) for dihedral with np^{r-1} >= 2 (the degenerate
/// np^{r-1} = 1 case is the 4-cycle A~3), E~6/7/8 for the exceptional
/// families.
AffineType expected_affine_type(const GroupSchemeSpec& spec);

/// Wraps a result in the standard {"spec", "assumptions", "result"} envelope.
nlohmann::json envelope_for(const GroupSchemeSpec& spec, const nlohmann::json& result);

nlohmann::json char_table_json(const GroupSchemeSpec& spec);
nlohmann::json mckay_json(const GroupSchemeSpec& spec);
nlohmann::json separated_json(const GroupSchemeSpec& spec);
nlohmann::json ar_component_json(const GroupSchemeSpec& spec, long l, int seed,
                                 long nu_min, long nu_max);
nlohmann::json tubes_json(const GroupSchemeSpec& spec);
/// Full invariant suite for one spec; `ok` reports overall success.
nlohmann::json check_json(const GroupSchemeSpec& spec, bool& ok);

/// Dispatch a parsed config: computes, renders (json/dot/text), writes to
/// config.out or stdout. Returns an exit code.
int run(const RunConfig& config);

}  // namespace arq

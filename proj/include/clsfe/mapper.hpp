#ifndef CLSFE_MAPPER_HPP
#define CLSFE_MAPPER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clsfe/inventory.hpp"
#include "clsfe/parser.hpp"

namespace clsfe {

enum class SubstitutionPolicy { Exact, Nearest, Drop };

std::optional<SubstitutionPolicy> policy_from_name(const std::string& name);
std::string to_string(SubstitutionPolicy p);

struct SubstitutionRecord {
    std::size_t position = 0;              // token index in the input sequence
    std::string source;
    std::optional<std::string> target;     // nullopt under Drop
    double distance = 0.0;
};

struct MapResult {
    LabelSequence sequence;
    std::vector<SubstitutionRecord> records;
};

// Hand-curated substitutions that preempt nearest-neighbour search.
using OverrideTable = std::map<std::string, std::string>;

// Rewrites seq so every phone lies in voice_phones; '#' passes through.
MapResult map_to_inventory(const LabelSequence& seq,
                           const std::set<std::string>& voice_phones,
                           const ClsInventory& inv, SubstitutionPolicy policy,
                           const OverrideTable& overrides = {});

struct OovProfile {
    std::map<std::string, std::size_t> missing;  // label -> occurrence count
    double rate = 0.0;                            // missing / non-'#' tokens
    std::size_t missing_tokens = 0;
    std::size_t total_tokens = 0;
};

OovProfile oov_profile(const LabelSequence& seq,
                       const std::set<std::string>& voice_phones);

// Substitution log line: `utt_id<TAB>index<TAB>source<TAB>target<TAB>distance`.
std::string substitution_log_line(const std::string& utt_id,
                                  const SubstitutionRecord& rec);

}  // namespace clsfe

#endif  // CLSFE_MAPPER_HPP

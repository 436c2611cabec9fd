#include "clsfe/mapper.hpp"

#include <sstream>

namespace clsfe {

std::optional<SubstitutionPolicy> policy_from_name(const std::string& name) {
    if (name == "exact") return SubstitutionPolicy::Exact;
    if (name == "nearest") return SubstitutionPolicy::Nearest;
    if (name == "drop") return SubstitutionPolicy::Drop;
    return std::nullopt;
}

std::string to_string(SubstitutionPolicy p) {
    switch (p) {
        case SubstitutionPolicy::Exact: return "exact";
        case SubstitutionPolicy::Nearest: return "nearest";
        case SubstitutionPolicy::Drop: return "drop";
    }
    return "?";
}

MapResult map_to_inventory(const LabelSequence& seq,
                           const std::set<std::string>& voice_phones,
                           const ClsInventory& inv, SubstitutionPolicy policy,
                           const OverrideTable& overrides) {
    if (voice_phones.empty())
        throw FrontendError("empty voice inventory");
    for (const std::string& label : voice_phones)
        if (!inv.has(label))
            throw FrontendError("voice inventory label '" + label +
                                "' not in CLS superset");

    MapResult result;
    result.sequence.utterance_id = seq.utterance_id;

    for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
        const std::string& label = seq.tokens[i];
        if (label == kWordBoundary || voice_phones.count(label)) {
            result.sequence.tokens.push_back(label);
            continue;
        }
        if (!inv.has(label))
            throw FrontendError("label '" + label +
                                "' not in CLS superset (token " +
                                std::to_string(i) + ")");
        switch (policy) {
            case SubstitutionPolicy::Exact:
                throw FrontendError("phone '" + label +
                                    "' missing from voice inventory (token " +
                                    std::to_string(i) + ")");
            case SubstitutionPolicy::Drop:
                result.records.push_back({i, label, std::nullopt, 0.0});
                break;
            case SubstitutionPolicy::Nearest: {
                std::string best;
                double best_dist = 0.0;
                auto ov = overrides.find(label);
                if (ov != overrides.end() && voice_phones.count(ov->second)) {
                    best = ov->second;
                    best_dist = inv.distance(label, best);
                } else {
                    // argmin over the voice inventory, lexicographic tie-break;
                    // the set iterates in label order so '<' keeps the first
                    for (const std::string& cand : voice_phones) {
                        double d = inv.distance(label, cand);
                        if (best.empty() || d < best_dist) {
                            best = cand;
                            best_dist = d;
                        }
                    }
                }
                result.sequence.tokens.push_back(best);
                result.records.push_back({i, label, best, best_dist});
                break;
            }
        }
    }
    normalize_boundaries(result.sequence.tokens);
    return result;
}

OovProfile oov_profile(const LabelSequence& seq,
                       const std::set<std::string>& voice_phones) {
    OovProfile profile;
    for (const std::string& label : seq.tokens) {
        if (label == kWordBoundary) continue;
        ++profile.total_tokens;
        if (!voice_phones.count(label)) {
            ++profile.missing_tokens;
            ++profile.missing[label];
        }
    }
    if (profile.total_tokens == 0)
        throw FrontendError("sequence has no phone tokens");
    profile.rate = static_cast<double>(profile.missing_tokens) /
                   static_cast<double>(profile.total_tokens);
    return profile;
}

std::string substitution_log_line(const std::string& utt_id,
                                  const SubstitutionRecord& rec) {
    std::ostringstream ss;
    ss << utt_id << '\t' << rec.position << '\t' << rec.source << '\t'
       << (rec.target ? *rec.target : "-") << '\t' << rec.distance;
    return ss.str();
}

}  // namespace clsfe

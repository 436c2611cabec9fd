#ifndef CLSFE_ROUTER_HPP
#define CLSFE_ROUTER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "clsfe/inventory.hpp"
#include "clsfe/mapper.hpp"
#include "clsfe/parser.hpp"

namespace clsfe {

struct VoiceProfile {
    std::string voice_id;
    std::string native_language;
    std::set<std::string> phone_labels;
    unsigned sample_rate_hz = 48000;
    unsigned bit_depth = 16;
};

// `voice_id<TAB>language<TAB>inventory-path<TAB>sample_rate<TAB>bit_depth`;
// inventory paths resolve relative to base_dir.
std::vector<VoiceProfile> load_voice_manifest(const std::string& manifest_text,
                                              const std::string& base_dir,
                                              const ClsInventory& inv);

// language -> preferred substitute languages, best first
class SimilarityTable {
public:
    static SimilarityTable load(const std::string& text);

    const std::vector<std::string>* preferences(const std::string& lang) const;
    void set(const std::string& lang, std::vector<std::string> prefs);

private:
    std::map<std::string, std::vector<std::string>> table_;
};

// Exact language match first, then the similarity table. Raises when
// neither applies; callers with a parsed utterance fall back to coverage.
const VoiceProfile& route(const std::string& lang,
                          const std::vector<VoiceProfile>& voices,
                          const SimilarityTable& table);

struct CoverageChoice {
    const VoiceProfile* voice;
    double oov_rate;
};

CoverageChoice route_by_coverage(const LabelSequence& seq,
                                 const std::vector<VoiceProfile>& voices);

struct RoutedUtterance {
    const VoiceProfile* voice;
    LabelSequence sequence;
    std::vector<SubstitutionRecord> records;
};

// parse_mixed -> route (coverage fallback) -> map_to_inventory.
RoutedUtterance route_utterance(std::string_view utf8_text,
                                const std::string& primary_language,
                                const std::vector<VoiceProfile>& voices,
                                const SimilarityTable& table,
                                const ParserTables& tables,
                                const SchwaConfig& schwa,
                                const SegmenterConfig& seg_config,
                                const ClsInventory& inv,
                                SubstitutionPolicy policy,
                                const OverrideTable& overrides = {});

}  // namespace clsfe

#endif  // CLSFE_ROUTER_HPP

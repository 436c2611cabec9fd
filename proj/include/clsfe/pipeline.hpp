#ifndef CLSFE_PIPELINE_HPP
#define CLSFE_PIPELINE_HPP

#include <memory>
#include <string>

#include "clsfe/inventory.hpp"
#include "clsfe/mapper.hpp"
#include "clsfe/parser.hpp"
#include "clsfe/router.hpp"
#include "clsfe/segmenter.hpp"

namespace clsfe {

// Everything a batch run needs, loaded fail-fast from one config file.
// Config lines are `key<TAB>value`; paths resolve relative to the config
// file's directory. Keys: inventory, script.<ScriptName>, lexicon,
// letter_rules, script_language_map, language_scripts, similarity, voices,
// primary_language, policy, schwa.<lang>, substitution_overrides.
struct Pipeline {
    ClsInventory inventory;
    ParserTables tables;
    SchwaConfig schwa;
    SegmenterConfig seg_config;
    SimilarityTable similarity;
    std::vector<VoiceProfile> voices;
    OverrideTable overrides;
    std::string primary_language = "hi";
    SubstitutionPolicy policy = SubstitutionPolicy::Nearest;

    static Pipeline load(const std::string& config_path);

    LabelSequence parse(std::string_view text) const {
        return parse_mixed(text, primary_language, tables, schwa, seg_config);
    }
    LabelSequence parse(std::string_view text, const std::string& primary) const {
        return parse_mixed(text, primary, tables, schwa, seg_config);
    }
    RoutedUtterance route(std::string_view text, const std::string& primary) const {
        return route_utterance(text, primary, voices, similarity, tables, schwa,
                               seg_config, inventory, policy, overrides);
    }
};

}  // namespace clsfe

#endif  // CLSFE_PIPELINE_HPP

#ifndef CLSFE_SEGMENTER_HPP
#define CLSFE_SEGMENTER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clsfe/util.hpp"

namespace clsfe {

enum class ScriptTag {
    Devanagari, Bengali, Gurmukhi, Gujarati, Oriya, Tamil, Telugu, Kannada,
    Malayalam, Latin, Neutral
};

std::string to_string(ScriptTag tag);
std::optional<ScriptTag> script_from_name(const std::string& name);

// Unicode-block script lookup. Neutral covers whitespace, digits shared
// across scripts, punctuation and format controls. Anything else raises.
ScriptTag script_of(char32_t cp);

// A maximal same-script span plus its attached Neutral run.
struct TextSegment {
    std::vector<char32_t> text;
    ScriptTag script = ScriptTag::Neutral;
    std::string language;
};

// Routing configuration for the segmenter: per-script default language and
// per-language native script (for the primary-language override).
struct SegmenterConfig {
    std::map<ScriptTag, std::string> script_language;   // script -> default lang
    std::map<std::string, ScriptTag> language_script;   // lang -> native script

    static SegmenterConfig load(const std::string& script_language_text,
                                const std::string& language_scripts_text);
};

std::string infer_language(ScriptTag script, const std::string& primary_language,
                           const SegmenterConfig& config);

// Splits text at script changes. Neutral runs attach to the preceding
// segment (leading ones to the first), so joining segment texts reproduces
// the input exactly.
std::vector<TextSegment> segment(const std::vector<char32_t>& text,
                                 const std::string& primary_language,
                                 const SegmenterConfig& config);

std::vector<TextSegment> segment(std::string_view utf8_text,
                                 const std::string& primary_language,
                                 const SegmenterConfig& config);

}  // namespace clsfe

#endif  // CLSFE_SEGMENTER_HPP

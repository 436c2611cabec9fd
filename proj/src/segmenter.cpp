#include "clsfe/segmenter.hpp"

#include <sstream>

namespace clsfe {

std::string to_string(ScriptTag tag) {
    switch (tag) {
        case ScriptTag::Devanagari: return "Devanagari";
        case ScriptTag::Bengali: return "Bengali";
        case ScriptTag::Gurmukhi: return "Gurmukhi";
        case ScriptTag::Gujarati: return "Gujarati";
        case ScriptTag::Oriya: return "Oriya";
        case ScriptTag::Tamil: return "Tamil";
        case ScriptTag::Telugu: return "Telugu";
        case ScriptTag::Kannada: return "Kannada";
        case ScriptTag::Malayalam: return "Malayalam";
        case ScriptTag::Latin: return "Latin";
        case ScriptTag::Neutral: return "Neutral";
    }
    return "?";
}

std::optional<ScriptTag> script_from_name(const std::string& name) {
    static const std::map<std::string, ScriptTag> kNames = {
        {"Devanagari", ScriptTag::Devanagari}, {"Bengali", ScriptTag::Bengali},
        {"Gurmukhi", ScriptTag::Gurmukhi}, {"Gujarati", ScriptTag::Gujarati},
        {"Oriya", ScriptTag::Oriya}, {"Tamil", ScriptTag::Tamil},
        {"Telugu", ScriptTag::Telugu}, {"Kannada", ScriptTag::Kannada},
        {"Malayalam", ScriptTag::Malayalam}, {"Latin", ScriptTag::Latin},
        {"Neutral", ScriptTag::Neutral}};
    auto it = kNames.find(name);
    if (it == kNames.end()) return std::nullopt;
    return it->second;
}

namespace {

bool is_ascii_letter(char32_t cp) {
    return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z');
}

bool is_neutral(char32_t cp) {
    if (cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r') return true;
    if (cp >= U'0' && cp <= U'9') return true;
    // ASCII punctuation
    if (cp < 0x80 && !is_ascii_letter(cp) && cp >= 0x21 && cp <= 0x7E)
        return true;
    // danda and double danda, shared across Indic scripts
    if (cp == 0x0964 || cp == 0x0965) return true;
    // native digit blocks sit at a common offset in each Brahmic block
    if (cp >= 0x0900 && cp <= 0x0D7F) {
        char32_t off = (cp - 0x0900) % 0x80;
        if (off >= 0x66 && off <= 0x6F) return true;
    }
    // general punctuation incl. ZWJ/ZWNJ, plus NBSP
    if (cp >= 0x2000 && cp <= 0x206F) return true;
    if (cp == 0x00A0) return true;
    return false;
}

}  // namespace

ScriptTag script_of(char32_t cp) {
    if (is_neutral(cp)) return ScriptTag::Neutral;
    if (is_ascii_letter(cp)) return ScriptTag::Latin;
    if (cp >= 0x0900 && cp <= 0x097F) return ScriptTag::Devanagari;
    if (cp >= 0x0980 && cp <= 0x09FF) return ScriptTag::Bengali;
    if (cp >= 0x0A00 && cp <= 0x0A7F) return ScriptTag::Gurmukhi;
    if (cp >= 0x0A80 && cp <= 0x0AFF) return ScriptTag::Gujarati;
    if (cp >= 0x0B00 && cp <= 0x0B7F) return ScriptTag::Oriya;
    if (cp >= 0x0B80 && cp <= 0x0BFF) return ScriptTag::Tamil;
    if (cp >= 0x0C00 && cp <= 0x0C7F) return ScriptTag::Telugu;
    if (cp >= 0x0C80 && cp <= 0x0CFF) return ScriptTag::Kannada;
    if (cp >= 0x0D00 && cp <= 0x0D7F) return ScriptTag::Malayalam;
    std::ostringstream err;
    err << "unsupported-script codepoint U+" << std::hex << std::uppercase
        << static_cast<uint32_t>(cp);
    throw FrontendError(err.str());
}

SegmenterConfig SegmenterConfig::load(const std::string& script_language_text,
                                      const std::string& language_scripts_text) {
    SegmenterConfig config;
    for (const auto& [lineno, line] : content_lines(script_language_text)) {
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 2)
            throw FrontendError("malformed script-language row", lineno);
        std::optional<ScriptTag> tag = script_from_name(fields[0]);
        if (!tag || *tag == ScriptTag::Neutral)
            throw FrontendError("unknown script name '" + fields[0] + "'", lineno);
        config.script_language[*tag] = fields[1];
    }
    for (const auto& [lineno, line] : content_lines(language_scripts_text)) {
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 2)
            throw FrontendError("malformed language-script row", lineno);
        std::optional<ScriptTag> tag = script_from_name(fields[1]);
        if (!tag || *tag == ScriptTag::Neutral)
            throw FrontendError("unknown script name '" + fields[1] + "'", lineno);
        config.language_script[fields[0]] = *tag;
    }
    return config;
}

std::string infer_language(ScriptTag script, const std::string& primary_language,
                           const SegmenterConfig& config) {
    auto native = config.language_script.find(primary_language);
    if (native != config.language_script.end() && native->second == script)
        return primary_language;
    auto it = config.script_language.find(script);
    if (it != config.script_language.end()) return it->second;
    throw FrontendError("no language mapping for script " + to_string(script));
}

std::vector<TextSegment> segment(const std::vector<char32_t>& text,
                                 const std::string& primary_language,
                                 const SegmenterConfig& config) {
    if (text.empty()) throw FrontendError("empty input");

    std::vector<TextSegment> segments;
    std::vector<char32_t> leading;  // Neutral run before the first segment
    for (char32_t cp : text) {
        ScriptTag tag = script_of(cp);
        if (tag == ScriptTag::Neutral) {
            if (segments.empty())
                leading.push_back(cp);
            else
                segments.back().text.push_back(cp);
            continue;
        }
        if (!segments.empty() && segments.back().script == tag) {
            segments.back().text.push_back(cp);
            continue;
        }
        TextSegment seg;
        seg.script = tag;
        seg.language = infer_language(tag, primary_language, config);
        if (segments.empty()) {
            seg.text = leading;
            leading.clear();
        }
        seg.text.push_back(cp);
        segments.push_back(std::move(seg));
    }
    if (segments.empty())
        throw FrontendError("input contains no scripted text");
    return segments;
}

std::vector<TextSegment> segment(std::string_view utf8_text,
                                 const std::string& primary_language,
                                 const SegmenterConfig& config) {
    return segment(utf8_decode(utf8_text), primary_language, config);
}

}  // namespace clsfe

#include "clsfe/router.hpp"

namespace clsfe {

std::vector<VoiceProfile> load_voice_manifest(const std::string& manifest_text,
                                              const std::string& base_dir,
                                              const ClsInventory& inv) {
    std::vector<VoiceProfile> voices;
    for (const auto& [lineno, line] : content_lines(manifest_text)) {
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 5)
            throw FrontendError("malformed voice manifest row", lineno);
        VoiceProfile v;
        v.voice_id = fields[0];
        v.native_language = fields[1];
        std::string path = fields[2];
        if (!path.empty() && path.front() != '/' && !base_dir.empty())
            path = base_dir + "/" + path;
        for (const auto& [pline, plabel] : content_lines(read_file(path))) {
            if (!inv.has(plabel))
                throw FrontendError("voice '" + v.voice_id +
                                        "' lists label '" + plabel +
                                        "' absent from CLS superset",
                                    pline);
            v.phone_labels.insert(plabel);
        }
        try {
            v.sample_rate_hz = static_cast<unsigned>(std::stoul(fields[3]));
            v.bit_depth = static_cast<unsigned>(std::stoul(fields[4]));
        } catch (const std::exception&) {
            throw FrontendError("malformed audio metadata", lineno);
        }
        if (v.sample_rate_hz == 0 || v.bit_depth == 0)
            throw FrontendError("audio metadata must be positive", lineno);
        voices.push_back(std::move(v));
    }
    if (voices.empty()) throw FrontendError("empty voice manifest");
    return voices;
}

SimilarityTable SimilarityTable::load(const std::string& text) {
    SimilarityTable table;
    for (const auto& [lineno, line] : content_lines(text)) {
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 2)
            throw FrontendError("malformed similarity row", lineno);
        std::vector<std::string> prefs = split(fields[1], ',');
        if (prefs.empty() || (prefs.size() == 1 && prefs[0].empty()))
            throw FrontendError("empty preference list for '" + fields[0] + "'",
                                lineno);
        std::set<std::string> seen;
        for (const std::string& p : prefs) {
            if (p == fields[0])
                throw FrontendError("language '" + fields[0] +
                                        "' lists itself as a preference",
                                    lineno);
            if (!seen.insert(p).second)
                throw FrontendError("duplicate preference '" + p + "'", lineno);
        }
        table.table_[fields[0]] = std::move(prefs);
    }
    return table;
}

const std::vector<std::string>* SimilarityTable::preferences(
    const std::string& lang) const {
    auto it = table_.find(lang);
    return it == table_.end() ? nullptr : &it->second;
}

void SimilarityTable::set(const std::string& lang,
                          std::vector<std::string> prefs) {
    table_[lang] = std::move(prefs);
}

const VoiceProfile& route(const std::string& lang,
                          const std::vector<VoiceProfile>& voices,
                          const SimilarityTable& table) {
    if (voices.empty()) throw FrontendError("no voices available");
    for (const VoiceProfile& v : voices)
        if (v.native_language == lang) return v;
    if (const std::vector<std::string>* prefs = table.preferences(lang)) {
        for (const std::string& pref : *prefs)
            for (const VoiceProfile& v : voices)
                if (v.native_language == pref) return v;
    }
    throw FrontendError("no route for language '" + lang +
                        "': no native voice and no similarity entry matches");
}

CoverageChoice route_by_coverage(const LabelSequence& seq,
                                 const std::vector<VoiceProfile>& voices) {
    if (voices.empty()) throw FrontendError("no voices available");
    const VoiceProfile* best = nullptr;
    double best_rate = 0.0;
    for (const VoiceProfile& v : voices) {
        double rate = oov_profile(seq, v.phone_labels).rate;
        if (!best || rate < best_rate) {
            best = &v;
            best_rate = rate;
        }
    }
    return {best, best_rate};
}

RoutedUtterance route_utterance(std::string_view utf8_text,
                                const std::string& primary_language,
                                const std::vector<VoiceProfile>& voices,
                                const SimilarityTable& table,
                                const ParserTables& tables,
                                const SchwaConfig& schwa,
                                const SegmenterConfig& seg_config,
                                const ClsInventory& inv,
                                SubstitutionPolicy policy,
                                const OverrideTable& overrides) {
    LabelSequence seq =
        parse_mixed(utf8_text, primary_language, tables, schwa, seg_config);
    const VoiceProfile* voice = nullptr;
    try {
        voice = &route(primary_language, voices, table);
    } catch (const FrontendError&) {
        voice = route_by_coverage(seq, voices).voice;
    }
    MapResult mapped =
        map_to_inventory(seq, voice->phone_labels, inv, policy, overrides);
    mapped.sequence.utterance_id = seq.utterance_id;
    return {voice, std::move(mapped.sequence), std::move(mapped.records)};
}

}  // namespace clsfe

#include "clsfe/pipeline.hpp"

#include <filesystem>

namespace clsfe {

Pipeline Pipeline::load(const std::string& config_path) {
    namespace fs = std::filesystem;
    std::string text = read_file(config_path);
    fs::path base = fs::path(config_path).parent_path();

    std::map<std::string, std::string> kv;
    std::map<std::string, std::size_t> kv_lines;
    for (const auto& [lineno, line] : content_lines(text)) {
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 2)
            throw FrontendError("malformed config row", lineno);
        if (kv.count(fields[0]))
            throw FrontendError("duplicate config key '" + fields[0] + "'",
                                lineno);
        kv[fields[0]] = fields[1];
        kv_lines[fields[0]] = lineno;
    }

    auto resolve = [&](const std::string& rel) {
        fs::path p(rel);
        return p.is_absolute() ? p.string() : (base / p).string();
    };
    auto require = [&](const std::string& key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end())
            throw FrontendError("config missing required key '" + key + "'");
        return it->second;
    };

    Pipeline p;
    p.inventory = ClsInventory::load_file(resolve(require("inventory")));

    bool any_script = false;
    for (const auto& [key, value] : kv) {
        if (key.rfind("script.", 0) != 0) continue;
        std::string name = key.substr(7);
        std::optional<ScriptTag> tag = script_from_name(name);
        if (!tag || *tag == ScriptTag::Neutral || *tag == ScriptTag::Latin)
            throw FrontendError("unknown script name '" + name + "' in config",
                                kv_lines.at(key));
        p.tables.scripts.emplace(
            *tag, RuleSet::load_file(*tag, resolve(value), p.inventory));
        any_script = true;
    }
    if (!any_script)
        throw FrontendError("config defines no script tables");

    p.tables.load_lexicon(read_file(resolve(require("lexicon"))), p.inventory);
    p.tables.load_letter_rules(read_file(resolve(require("letter_rules"))),
                               p.inventory);
    p.seg_config = SegmenterConfig::load(
        read_file(resolve(require("script_language_map"))),
        read_file(resolve(require("language_scripts"))));
    p.similarity = SimilarityTable::load(read_file(resolve(require("similarity"))));

    std::string manifest_path = resolve(require("voices"));
    p.voices = load_voice_manifest(
        read_file(manifest_path),
        fs::path(manifest_path).parent_path().parent_path().string(),
        p.inventory);

    if (kv.count("primary_language")) p.primary_language = kv["primary_language"];
    if (kv.count("policy")) {
        std::optional<SubstitutionPolicy> pol = policy_from_name(kv["policy"]);
        if (!pol)
            throw FrontendError("unknown substitution policy '" + kv["policy"] + "'",
                                kv_lines.at("policy"));
        p.policy = *pol;
    }
    for (const auto& [key, value] : kv) {
        if (key.rfind("schwa.", 0) != 0) continue;
        std::string lang = key.substr(6);
        if (value == "delete-final")
            p.schwa.set(lang, SchwaPolicy::DeleteFinalSchwa);
        else if (value == "retain")
            p.schwa.set(lang, SchwaPolicy::Retain);
        else
            throw FrontendError("unknown schwa policy '" + value + "'",
                                kv_lines.at(key));
    }
    if (kv.count("substitution_overrides")) {
        for (const auto& [lineno, line] :
             content_lines(read_file(resolve(kv["substitution_overrides"])))) {
            std::vector<std::string> fields = split(line, '\t');
            if (fields.size() != 2)
                throw FrontendError("malformed override row", lineno);
            if (!p.inventory.has(fields[0]) || !p.inventory.has(fields[1]))
                throw FrontendError("override references unknown label", lineno);
            p.overrides[fields[0]] = fields[1];
        }
    }
    return p;
}

}  // namespace clsfe

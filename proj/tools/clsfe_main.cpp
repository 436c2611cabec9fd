#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clsfe/eval.hpp"
#include "clsfe/pipeline.hpp"

namespace {

using namespace clsfe;

struct CorpusLine {
    std::string utt_id;
    std::string text;
};

std::vector<CorpusLine> read_corpus(const std::string& path) {
    std::vector<CorpusLine> out;
    for (const auto& [lineno, line] : content_lines(read_file(path))) {
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 2)
            throw FrontendError("malformed corpus line", lineno);
        out.push_back({fields[0], fields[1]});
    }
    if (out.empty()) throw FrontendError("empty corpus: " + path);
    return out;
}

int run_batch(const std::string& input, const std::string& out_path,
              const std::string& errors_path, bool strict, bool keep_going,
              const std::function<std::string(const CorpusLine&)>& process) {
    std::vector<CorpusLine> corpus = read_corpus(input);
    std::ostringstream out, errors;
    std::size_t failed = 0;
    for (const CorpusLine& line : corpus) {
        try {
            out << process(line) << '\n';
        } catch (const FrontendError& e) {
            ++failed;
            errors << line.utt_id << '\t' << e.what() << '\n';
            if (strict) {
                std::cerr << "error: " << line.utt_id << ": " << e.what() << "\n";
                if (!errors_path.empty()) write_file(errors_path, errors.str());
                return 1;
            }
        }
    }
    write_file(out_path, out.str());
    if (!errors_path.empty()) write_file(errors_path, errors.str());
    if (failed) {
        std::cerr << failed << " line(s) failed";
        if (!errors_path.empty()) std::cerr << ", see " << errors_path;
        std::cerr << "\n";
        return keep_going ? 0 : 1;
    }
    return 0;
}

std::string fixed2(double v) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(2);
    ss << v;
    return ss.str();
}

int cmd_eval(const std::string& ratings_path, const std::string& out_path) {
    RatingsFile ratings = load_ratings(read_file(ratings_path));
    std::ostringstream tsv;
    if (ratings.design == "mos" || ratings.design == "mos-cells") {
        MosTable table = ratings.design == "mos"
                             ? mos_table(ratings.mos)
                             : mos_table_from_cells(ratings.mos_cells);
        std::cout << "Per-cell means (language, voice, measure):\n";
        tsv << "cell\tlanguage\tvoice\tmeasure\tmean\traw\n";
        for (const auto& [key, mean] : table.cells) {
            const auto& [lang, voice, measure] = key;
            std::cout << "  " << lang << "  " << voice << "  " << measure
                      << "  " << mean.to_fixed2() << "\n";
            tsv << "cell\t" << lang << '\t' << voice << '\t' << measure << '\t'
                << mean.to_fixed2() << '\t' << mean.num << '/' << mean.den
                << '\n';
        }
        std::cout << "Grand means (voice, measure), unweighted over languages:\n";
        for (const auto& [key, mean] : table.grand_means) {
            std::cout << "  " << key.first << "  " << key.second << "  "
                      << mean.to_fixed2() << "\n";
            tsv << "grand\t-\t" << key.first << '\t' << key.second << '\t'
                << mean.to_fixed2() << '\t' << mean.num << '/' << mean.den
                << '\n';
        }
    } else if (ratings.design == "axy") {
        auto prefs = axy_preference(ratings.axy);
        std::cout << "AXY preference fractions (X, Y, neither):\n";
        tsv << "pair_x\tpair_y\tfrac_x\tfrac_y\tfrac_neither\tcount\n";
        for (const auto& [pair, f] : prefs) {
            std::cout << "  " << pair.first << " vs " << pair.second << ": "
                      << f.x.to_fixed2() << " / " << f.y.to_fixed2() << " / "
                      << f.neither.to_fixed2() << "  (n=" << f.count << ")\n";
            tsv << pair.first << '\t' << pair.second << '\t' << f.x.to_fixed2()
                << '\t' << f.y.to_fixed2() << '\t' << f.neither.to_fixed2()
                << '\t' << f.count << '\n';
        }
    } else if (ratings.design == "langid") {
        Confusion conf = langid_confusion(ratings.langid);
        std::cout << "Language-ID confusion (true -> chosen):\n";
        tsv << "true\tchosen\tcount\n";
        for (const auto& [key, count] : conf.matrix) {
            std::cout << "  " << key.first << " -> " << key.second << ": "
                      << count << "\n";
            tsv << key.first << '\t' << key.second << '\t' << count << '\n';
        }
        std::cout << "Accuracy: " << conf.accuracy.to_fixed2() << " ("
                  << conf.accuracy.num << "/" << conf.accuracy.den << ")\n";
        tsv << "accuracy\t-\t" << conf.accuracy.to_fixed2() << '\n';
    }
    if (!out_path.empty()) write_file(out_path, tsv.str());
    return 0;
}

int cmd_sheet(const std::string& stimuli_path, const std::string& design_name,
              std::uint64_t seed, const std::string& out_path) {
    std::ostringstream out;
    if (design_name == "axy") {
        std::vector<AxyItem> items;
        for (const auto& [lineno, line] : content_lines(read_file(stimuli_path))) {
            std::vector<std::string> f = split(line, '\t');
            if (f.size() != 4)
                throw FrontendError("AXY stimuli need item\tA\tX\tY", lineno);
            items.push_back({f[0], f[1], f[2], f[3]});
        }
        for (const SheetEntry& e : make_axy_sheet(items, seed)) {
            out << e.position << '\t' << e.item_id;
            for (const std::string& r : e.role_fields) out << '\t' << r;
            out << '\n';
        }
    } else {
        SheetDesign design;
        if (design_name == "mos") design = SheetDesign::MOS;
        else if (design_name == "langid") design = SheetDesign::LangID;
        else throw FrontendError("unknown design '" + design_name + "'");
        std::vector<std::string> stimuli;
        for (const auto& [lineno, line] : content_lines(read_file(stimuli_path)))
            stimuli.push_back(split(line, '\t')[0]);
        for (const SheetEntry& e : make_sheet(stimuli, design, seed))
            out << e.position << '\t' << e.item_id << '\n';
    }
    if (out_path.empty())
        std::cout << out.str();
    else
        write_file(out_path, out.str());
    return 0;
}

int cmd_report(const std::string& labels_path, const Pipeline& pipe) {
    std::vector<LabelSequence> seqs;
    for (const auto& [lineno, line] : content_lines(read_file(labels_path)))
        seqs.push_back(parse_label_line(line));
    if (seqs.empty()) throw FrontendError("empty label file");
    for (const VoiceProfile& v : pipe.voices) {
        std::size_t missing = 0, total = 0;
        std::map<std::string, std::size_t> histogram;
        for (const LabelSequence& seq : seqs) {
            OovProfile p = oov_profile(seq, v.phone_labels);
            missing += p.missing_tokens;
            total += p.total_tokens;
            for (const auto& [label, count] : p.missing)
                histogram[label] += count;
        }
        double rate = total ? static_cast<double>(missing) / total : 0.0;
        std::cout << v.voice_id << "\toov_rate=" << fixed2(rate) << "\t("
                  << missing << "/" << total << ")";
        for (const auto& [label, count] : histogram)
            std::cout << "  " << label << ":" << count;
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multilingual CLS text front-end"};
    app.require_subcommand(1);

    std::string config_path, input, out_path, errors_path, primary, policy_name;
    std::string design_name = "mos";
    std::uint64_t seed = 0;
    bool strict = false, keep_going = false;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        if (needs_config)
            cmd->add_option("--config", config_path, "pipeline config file")
                ->required();
        cmd->add_option("--out", out_path, "output path");
    };

    CLI::App* parse_cmd = app.add_subcommand("parse", "corpus -> CLS label file");
    add_common(parse_cmd, true);
    parse_cmd->add_option("input", input, "corpus file (utt_id<TAB>text)")
        ->required();
    parse_cmd->add_option("--primary-lang", primary, "primary language code");
    parse_cmd->add_option("--errors", errors_path, "errors file path");
    parse_cmd->add_flag("--strict", strict, "abort on first failing line");
    parse_cmd->add_flag("--keep-going", keep_going,
                        "exit 0 even when lines fail");

    CLI::App* route_cmd =
        app.add_subcommand("route", "corpus -> voice-routed label file");
    add_common(route_cmd, true);
    route_cmd->add_option("input", input, "corpus file")->required();
    route_cmd->add_option("--primary-lang", primary, "primary language code");
    route_cmd->add_option("--policy", policy_name, "exact|nearest|drop");
    route_cmd->add_option("--errors", errors_path, "errors file path");
    std::string sub_log_path;
    route_cmd->add_option("--sub-log", sub_log_path, "substitution log path");
    route_cmd->add_flag("--strict", strict, "abort on first failing line");
    route_cmd->add_flag("--keep-going", keep_going,
                        "exit 0 even when lines fail");

    CLI::App* report_cmd =
        app.add_subcommand("report", "per-voice coverage of a label file");
    add_common(report_cmd, true);
    report_cmd->add_option("input", input, "label file")->required();

    CLI::App* eval_cmd = app.add_subcommand("eval", "aggregate listening-test ratings");
    add_common(eval_cmd, false);
    eval_cmd->add_option("input", input, "ratings file")->required();

    CLI::App* sheet_cmd =
        app.add_subcommand("sheet", "randomized listening-test sheet");
    add_common(sheet_cmd, false);
    sheet_cmd->add_option("input", input, "stimuli file")->required();
    sheet_cmd->add_option("--design", design_name, "mos|axy|langid");
    sheet_cmd->add_option("--seed", seed, "shuffle seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse_cmd->parsed() || route_cmd->parsed() || report_cmd->parsed()) {
            clsfe::Pipeline pipe = clsfe::Pipeline::load(config_path);
            if (!primary.empty()) pipe.primary_language = primary;
            if (!policy_name.empty()) {
                auto p = clsfe::policy_from_name(policy_name);
                if (!p) throw clsfe::FrontendError("unknown policy '" + policy_name + "'");
                pipe.policy = *p;
            }
            if (parse_cmd->parsed()) {
                if (out_path.empty()) out_path = input + ".labels";
                if (errors_path.empty()) errors_path = out_path + ".errors";
                return run_batch(input, out_path, errors_path, strict, keep_going,
                                 [&](const CorpusLine& line) {
                                     clsfe::LabelSequence seq = pipe.parse(line.text);
                                     seq.utterance_id = line.utt_id;
                                     return seq.to_line();
                                 });
            }
            if (route_cmd->parsed()) {
                if (out_path.empty()) out_path = input + ".routed";
                if (errors_path.empty()) errors_path = out_path + ".errors";
                std::ostringstream sub_log;
                int rc = run_batch(
                    input, out_path, errors_path, strict, keep_going,
                    [&](const CorpusLine& line) {
                        clsfe::RoutedUtterance routed =
                            pipe.route(line.text, pipe.primary_language);
                        routed.sequence.utterance_id = line.utt_id;
                        for (const clsfe::SubstitutionRecord& rec : routed.records)
                            sub_log << clsfe::substitution_log_line(line.utt_id, rec)
                                    << '\n';
                        return line.utt_id + "\t" + routed.voice->voice_id + "\t" +
                               clsfe::split(routed.sequence.to_line(), '\t')[1];
                    });
                if (!sub_log_path.empty())
                    clsfe::write_file(sub_log_path, sub_log.str());
                return rc;
            }
            return cmd_report(input, pipe);
        }
        if (eval_cmd->parsed()) return cmd_eval(input, out_path);
        if (sheet_cmd->parsed()) return cmd_sheet(input, design_name, seed, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

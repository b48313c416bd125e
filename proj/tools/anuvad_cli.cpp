// anuvad: batch Hindi -> English translation CLI.
//
// Subcommands: translate, translit, parse, lint. Resource paths come from
// flags, a key=value config file (--config or $ANUVAD_CONFIG), or defaults
// under ./data.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anuvad/engine.hpp"

namespace {

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::vector<std::string>& files) {
  if (files.empty() || (files.size() == 1 && files[0] == "-"))
    return read_stream(std::cin);
  std::string all;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + f);
    all += read_stream(in);
    all += '\n';
  }
  return all;
}

struct PathOptions {
  std::string lexicon = "data/lexicon.tsv";
  std::string grammar = "data/grammar.cfg";
  std::string rules = "data/rules.txt";
  std::string translit = "data/translit.tsv";
  std::string config;
};

void apply_config_file(PathOptions& p, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = anuvad::detail::strip(line.substr(0, eq));
    std::string value = anuvad::detail::strip(line.substr(eq + 1));
    if (key == "lexicon") p.lexicon = value;
    else if (key == "grammar") p.grammar = value;
    else if (key == "rules") p.rules = value;
    else if (key == "translit-table") p.translit = value;
    else if (!key.empty())
      throw std::runtime_error("config: unknown key '" + key + "'");
  }
}

void add_path_options(CLI::App* cmd, PathOptions& p) {
  cmd->add_option("--lexicon", p.lexicon, "lexicon TSV file");
  cmd->add_option("--grammar", p.grammar, "grammar file");
  cmd->add_option("--rules", p.rules, "transfer-rule file");
  cmd->add_option("--translit-table", p.translit, "transliteration table");
  cmd->add_option("--config", p.config, "key=value config file");
}

anuvad::EngineConfig make_config(PathOptions p) {
  if (p.config.empty()) {
    if (const char* env = std::getenv("ANUVAD_CONFIG")) p.config = env;
  }
  // config file fills paths first; explicit flags already replaced defaults
  PathOptions defaults;
  if (!p.config.empty()) {
    PathOptions from_file = p;
    apply_config_file(from_file, p.config);
    // a flag set away from the default wins over the config file
    if (p.lexicon == defaults.lexicon) p.lexicon = from_file.lexicon;
    if (p.grammar == defaults.grammar) p.grammar = from_file.grammar;
    if (p.rules == defaults.rules) p.rules = from_file.rules;
    if (p.translit == defaults.translit) p.translit = from_file.translit;
  }
  anuvad::EngineConfig cfg;
  cfg.lexicon_path = p.lexicon;
  cfg.grammar_path = p.grammar;
  cfg.rules_path = p.rules;
  cfg.translit_table_path = p.translit;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rule-based Hindi to English translation"};
  app.require_subcommand(1);

  PathOptions paths;
  std::vector<std::string> files;
  bool synonyms_all = false, trace = false, dump_chart = false;
  std::size_t all_parses = 0;

  auto* translate = app.add_subcommand("translate", "translate documents");
  add_path_options(translate, paths);
  translate->add_option("files", files, "input files ('-' or none = stdin)");
  translate->add_flag("--synonyms", synonyms_all,
                      "emit all synonym candidates, '|' separated");
  translate->add_flag("--trace", trace, "JSON-lines trace output");

  auto* translit = app.add_subcommand("translit", "romanize Devanagari words");
  std::vector<std::string> words;
  translit->add_option("--translit-table", paths.translit, "transliteration table");
  translit->add_option("words", words, "words to romanize")->required();

  auto* parse = app.add_subcommand("parse", "parse sentences and dump charts");
  add_path_options(parse, paths);
  parse->add_option("files", files, "input files ('-' or none = stdin)");
  parse->add_flag("--dump-chart", dump_chart, "print the CYK chart per sentence");
  parse->add_option("--all-parses", all_parses,
                    "enumerate up to N parse trees (max 16)");

  auto* lint = app.add_subcommand("lint", "validate resource files");
  add_path_options(lint, paths);

  CLI11_PARSE(app, argc, argv);

  try {
    if (translit->parsed()) {
      auto table = anuvad::load_translit_table(paths.translit);
      for (const auto& w : words) {
        try {
          std::cout << anuvad::romanize(w, table) << "\n";
        } catch (const anuvad::TranslitError& e) {
          std::cout << w << "\n";
          std::cerr << "warning: " << w << ": " << e.what() << "\n";
        }
      }
      return 0;
    }

    if (lint->parsed()) {
      auto cfg = make_config(paths);
      auto diags = anuvad::lint_resources(cfg);
      bool failed = false;
      for (const auto& d : diags) {
        bool err = d.severity == anuvad::Diagnostic::Severity::ERROR;
        failed = failed || err;
        std::cout << (err ? "error: " : "warning: ") << d.message << "\n";
      }
      if (!failed) std::cout << "resources ok (" << diags.size() << " warnings)\n";
      return failed ? 1 : 0;
    }

    auto cfg = make_config(paths);
    cfg.synonym_policy = synonyms_all ? anuvad::SynonymPolicy::ALL
                                      : anuvad::SynonymPolicy::FIRST;
    cfg.trace = trace;
    cfg.dump_chart = dump_chart || parse->parsed();
    auto res = anuvad::load_resources(cfg);
    anuvad::RawDocument doc{read_input(files)};
    auto report = anuvad::translate_document(doc, res, cfg);

    if (parse->parsed()) {
      anuvad::RawDocument clean = anuvad::preprocess(doc);
      for (const auto& s : anuvad::split_sentences(clean)) {
        auto tokens = anuvad::tag_tokens(anuvad::tokenize(s), res.lexicon);
        auto chart = anuvad::cyk_recognize(tokens, res.cnf);
        std::cout << s.text << "\n"
                  << anuvad::render_chart(chart)
                  << (anuvad::recognized(chart, res.cnf) ? "recognized"
                                                        : "not recognized")
                  << "\n";
        if (all_parses > 0) {
          auto trees = anuvad::extract_trees(chart, res.cnf, tokens,
                                             std::min<std::size_t>(all_parses, 16));
          for (const auto& t : trees)
            std::cout << anuvad::tree_to_string(t) << "\n";
        }
        std::cout << "\n";
      }
      return 0;
    }

    bool all_ok = true;
    for (const auto& r : report.sentences) {
      if (cfg.trace) {
        std::cout << anuvad::trace_record(r).dump() << "\n";
      } else {
        std::cout << r.output << "\n";
      }
      if (r.output.empty()) all_ok = false;
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    }
    return all_ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

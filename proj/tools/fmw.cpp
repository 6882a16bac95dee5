#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "fmw/aristotelian.hpp"
#include "fmw/cfg.hpp"
#include "fmw/charsets.hpp"
#include "fmw/config.hpp"
#include "fmw/eval.hpp"
#include "fmw/forms.hpp"
#include "fmw/godel.hpp"
#include "fmw/machine.hpp"
#include "fmw/operators.hpp"
#include "fmw/psi.hpp"
#include "fmw/structure.hpp"
#include "fmw/syntax.hpp"

namespace {

using namespace fmw;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

int verdict(bool b) {
  std::cout << (b ? "true" : "false") << "\n";
  return b ? kTrue : kFalse;
}

Structure load_structure(const std::string& file) { return parse_structure(read_text_file(file)); }
Formula load_sentence(const std::string& file) { return parse_formula(read_text_file(file)); }
OracleMachine load_machine(const std::string& file) { return parse_machine(read_text_file(file)); }
Grammar load_grammar(const std::string& file) { return parse_grammar(read_text_file(file)); }

void print_witness(const std::optional<Structure>& w) {
  if (w) {
    std::cout << "counterexample\n" << print_structure(*w);
  } else {
    std::cout << "none\n";
  }
}

// Sampling mode for the bounded checks: `count` uniformly random structures of
// size n drawn from a seeded generator.
std::optional<Structure> sample_first(const Vocabulary& vocab, int n, std::uint64_t count, std::uint64_t seed,
                                      const std::function<bool(const Structure&)>& pred) {
  std::mt19937_64 rng(seed);
  const std::size_t len = encoding_length(vocab, n);
  for (std::uint64_t i = 0; i < count; ++i) {
    BitString bits(len, '0');
    for (auto& b : bits) b = (rng() & 1U) ? '1' : '0';
    Structure a = decode_bin(vocab, bits);
    if (pred(a)) return a;
  }
  return std::nullopt;
}

void print_form(const CanonicalForm& f, const std::string& emit) {
  if (emit == "godel") {
    std::cout << godel_encode(f.formula) << "\n";
  } else {
    std::cout << print_formula(f.formula) << "\n";
  }
}

void print_components(const CanonicalForm& f) {
  std::cout << "kind: " << to_string(f.kind) << "\n";
  std::cout << "class: " << to_string(f.cls) << "\n";
  std::cout << "tau: " << f.tau.to_string() << "\n";
  std::cout << "gamma: " << print_formula(f.gamma) << "\n";
  if (f.machine) std::cout << "machine: " << encode_tm(*f.machine) << "\n";
  if (!f.lambda.empty()) std::cout << "lambda: " << print_formula(f.lambda) << "\n";
  if (!f.upsilon_tau.empty()) std::cout << "upsilon_tau: " << print_formula(f.upsilon_tau) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model-theory workbench"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  int result = kTrue;
  int nmax = 3;
  int budget = 8;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::string emit = "text";

  auto add_nmax = [&](CLI::App* c) { c->add_option("--nmax", nmax, "Largest universe size")->check(CLI::Range(2, 64)); };
  auto add_jobs = [&](CLI::App* c) { c->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 256U)); };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", budget, "CHAR recursion budget")->check(CLI::NonNegativeNumber);
  };
  auto add_emit = [&](CLI::App* c, std::vector<std::string> choices) {
    c->add_option("--emit", emit, "Output format")->check(CLI::IsMember(std::move(choices)));
  };
  auto eval_options = [&] {
    EvalOptions o;
    o.char_budget = budget;
    o.cache = std::make_shared<CharCache>();
    return o;
  };

  // mc
  std::string structure_file, sentence_file, other_file;
  auto* mc = app.add_subcommand("mc", "Model check a sentence on a structure");
  mc->add_option("structure", structure_file)->required()->check(CLI::ExistingFile);
  mc->add_option("sentence", sentence_file)->required()->check(CLI::ExistingFile);
  add_budget(mc);
  mc->callback([&] { result = verdict(models(load_structure(structure_file), load_sentence(sentence_file), eval_options())); });

  // enc / dec
  auto* enc = app.add_subcommand("enc", "Binary encoding <A> of a structure");
  enc->add_option("structure", structure_file)->required()->check(CLI::ExistingFile);
  enc->callback([&] { std::cout << encode_bin(load_structure(structure_file)) << "\n"; });

  std::string vocab_text, bits;
  auto* dec = app.add_subcommand("dec", "Decode a binary encoding");
  dec->add_option("--vocab", vocab_text, "Vocabulary, e.g. \"E:2 <\"")->required();
  dec->add_option("bits", bits)->required();
  dec->callback([&] { std::cout << print_structure(decode_bin(Vocabulary::parse(vocab_text), bits)); });

  // benc / uenc-len / reconstruct / canon / iso
  auto* benc_cmd = app.add_subcommand("benc", "Condensed encoding of an Aristotelian structure");
  benc_cmd->add_option("structure", structure_file)->required()->check(CLI::ExistingFile);
  benc_cmd->callback([&] { std::cout << benc(load_structure(structure_file)).bits() << "\n"; });

  auto* uenc = app.add_subcommand("uenc-len", "Length of the unary encoding");
  uenc->add_option("structure", structure_file)->required()->check(CLI::ExistingFile);
  uenc->callback([&] { std::cout << uenc_length(load_structure(structure_file)) << "\n"; });

  auto* recon = app.add_subcommand("reconstruct", "Rebuild a structure from its condensed encoding");
  recon->add_option("--vocab", vocab_text)->required();
  recon->add_option("bits", bits)->required();
  recon->callback([&] { std::cout << print_structure(reconstruct(Vocabulary::parse(vocab_text), bits)); });

  auto* canon = app.add_subcommand("canon", "Canonical relabelling of an Aristotelian structure");
  canon->add_option("structure", structure_file)->required()->check(CLI::ExistingFile);
  canon->callback([&] { std::cout << print_structure(canonize(load_structure(structure_file))); });

  auto* iso = app.add_subcommand("iso", "Brute-force isomorphism test");
  iso->add_option("first", structure_file)->required()->check(CLI::ExistingFile);
  iso->add_option("second", other_file)->required()->check(CLI::ExistingFile);
  iso->callback([&] { result = verdict(is_isomorphic(load_structure(structure_file), load_structure(other_file))); });

  // op-apply
  std::string setting = "ord";
  auto* op = app.add_subcommand("op-apply", "Move a distinguished sentence to a target vocabulary");
  op->add_option("--setting", setting)->check(CLI::IsMember({"ord", "unord"}));
  op->add_option("--tau", vocab_text, "Target vocabulary")->required();
  op->add_option("sentence", sentence_file)->required()->check(CLI::ExistingFile);
  add_emit(op, {"text", "godel"});
  op->callback([&] {
    const auto tau = Vocabulary::parse(vocab_text);
    const auto f = setting == "ord" ? apply_T_ord(load_sentence(sentence_file), tau)
                                    : apply_T_unord(load_sentence(sentence_file), tau);
    std::cout << (emit == "godel" ? godel_encode(f) : print_formula(f)) << "\n";
  });

  // psi
  bool psi_recognize_mode = false;
  std::string psi_input;
  auto* psi = app.add_subcommand("psi", "Encoding sentence of a bit string");
  psi->add_flag("--recognize", psi_recognize_mode, "Read a sentence file and print its string");
  psi->add_option("input", psi_input, "Bit string, or sentence file with --recognize")->required();
  psi->callback([&] {
    if (!psi_recognize_mode) {
      std::cout << print_formula(psi_encode(psi_input)) << "\n";
      return;
    }
    const auto w = psi_recognize(load_sentence(psi_input));
    if (w) {
      std::cout << *w << "\n";
    } else {
      std::cout << "not an encoding sentence\n";
      result = kFalse;
    }
  });

  // tm
  std::string machine_file, gamma_file, target_file;
  std::optional<std::uint64_t> max_steps;
  auto* tm = app.add_subcommand("tm", "Oracle machines");
  tm->require_subcommand(1);
  auto* tm_run = tm->add_subcommand("run", "Run a machine with a sentence oracle");
  tm_run->add_option("machine", machine_file)->required()->check(CLI::ExistingFile);
  tm_run->add_option("input", bits, "Input bit string")->required();
  tm_run->add_option("--oracle", gamma_file, "Oracle sentence")->required()->check(CLI::ExistingFile);
  tm_run->add_option("--vocab", vocab_text, "Oracle vocabulary")->required();
  tm_run->add_option("--max-steps", max_steps);
  tm_run->callback([&] {
    const auto t = load_machine(machine_file);
    const auto r = simulate(t, bits, sentence_oracle(load_sentence(gamma_file), Vocabulary::parse(vocab_text)),
                            RunLimits{max_steps});
    std::cout << (r.accepted ? "accept" : "reject") << " steps=" << r.steps << " queries=" << r.queries
              << " reason=" << r.reason << "\n";
    result = r.accepted ? kTrue : kFalse;
  });
  auto* tm_encode = tm->add_subcommand("encode", "Print the machine code");
  tm_encode->add_option("machine", machine_file)->required()->check(CLI::ExistingFile);
  tm_encode->callback([&] { std::cout << encode_tm(load_machine(machine_file)) << "\n"; });
  auto* tm_decode = tm->add_subcommand("decode", "Print a machine from its code");
  tm_decode->add_option("bits", bits)->required();
  tm_decode->callback([&] { std::cout << print_machine(decode_tm(bits)); });
  auto* tm_check = tm->add_subcommand("check-reduction", "Search the least B where the reduction fails");
  tm_check->add_option("machine", machine_file)->required()->check(CLI::ExistingFile);
  tm_check->add_option("--gamma", gamma_file, "Oracle sentence")->required()->check(CLI::ExistingFile);
  tm_check->add_option("--target", target_file, "Sentence the machine should decide")->required()->check(CLI::ExistingFile);
  tm_check->add_option("--vocab", vocab_text)->required();
  add_nmax(tm_check);
  add_jobs(tm_check);
  tm_check->callback([&] {
    const auto w = is_reduction_upto(load_machine(machine_file), load_sentence(gamma_file), load_sentence(target_file),
                                     Vocabulary::parse(vocab_text), nmax, jobs);
    print_witness(w);
    result = w ? kFalse : kTrue;
  });

  // cfg
  std::string grammar_file, word;
  int lenmax = 6;
  auto* cfg = app.add_subcommand("cfg", "Context-free grammars");
  cfg->require_subcommand(1);
  auto* cfg_member = cfg->add_subcommand("member", "CYK membership");
  cfg_member->add_option("grammar", grammar_file)->required()->check(CLI::ExistingFile);
  cfg_member->add_option("word", word, "Word; empty string for epsilon")->required();
  cfg_member->callback([&] { result = verdict(cyk_member(load_grammar(grammar_file), word)); });
  auto* cfg_missing = cfg->add_subcommand("missing", "Least word not generated");
  cfg_missing->add_option("grammar", grammar_file)->required()->check(CLI::ExistingFile);
  cfg_missing->add_option("--lenmax", lenmax)->check(CLI::Range(0, 64));
  cfg_missing->callback([&] {
    const auto w = find_missing(load_grammar(grammar_file), lenmax);
    if (w) {
      std::cout << "missing \"" << *w << "\"\n";
      result = kFalse;
    } else {
      std::cout << "none\n";
    }
  });
  auto* cfg_cnf = cfg->add_subcommand("cnf", "Print the Chomsky normal form");
  cfg_cnf->add_option("grammar", grammar_file)->required()->check(CLI::ExistingFile);
  add_emit(cfg_cnf, {"text", "godel"});
  cfg_cnf->callback([&] {
    const auto g = to_cnf(load_grammar(grammar_file));
    std::cout << (emit == "godel" ? encode_grammar(g) + "\n" : print_grammar(g));
  });

  // charset
  std::string charset_kind = "ord", lambda_file, upsilon_file;
  auto* charset = app.add_subcommand("charset", "Characteristic sets");
  charset->require_subcommand(1);
  auto* cs_member = charset->add_subcommand("member", "Decide membership of a structure");
  cs_member->add_option("--kind", charset_kind)->required()->check(CLI::IsMember({"ord", "unord", "npconp", "cfg"}));
  cs_member->add_option("structure", structure_file)->required()->check(CLI::ExistingFile);
  cs_member->add_option("--gamma", gamma_file)->check(CLI::ExistingFile);
  cs_member->add_option("--machine", machine_file)->check(CLI::ExistingFile);
  cs_member->add_option("--upsilon-tau", upsilon_file, "Distinguished sentence over the structure's vocabulary")
      ->check(CLI::ExistingFile);
  cs_member->add_option("--lambda", lambda_file)->check(CLI::ExistingFile);
  cs_member->add_option("--grammar", grammar_file)->check(CLI::ExistingFile);
  cs_member->callback([&] {
    auto need = [](const std::string& f, const char* flag) {
      if (f.empty()) throw CLI::RequiredError(flag);
      return f;
    };
    const auto a = load_structure(structure_file);
    const auto o = eval_options();
    if (charset_kind == "cfg") {
      result = verdict(member_S_cfg(a, load_grammar(need(grammar_file, "--grammar"))));
    } else if (charset_kind == "npconp") {
      result = verdict(member_S_npconp(a, load_sentence(need(lambda_file, "--lambda")),
                                       load_sentence(need(gamma_file, "--gamma")), o));
    } else {
      const auto g = load_sentence(need(gamma_file, "--gamma"));
      const auto t = load_machine(need(machine_file, "--machine"));
      const auto u = load_sentence(need(upsilon_file, "--upsilon-tau"));
      result = verdict(charset_kind == "ord" ? member_S_ord(a, g, t, u, o) : member_S_unord(a, g, t, u, o));
    }
  });

  // form
  std::string form_kind = "ord5", class_text = "NP", config_file;
  std::size_t form_budget = 20;
  auto* form = app.add_subcommand("form", "Canonical forms");
  form->require_subcommand(1);
  auto form_common = [&](CLI::App* c) {
    c->add_option("--kind", form_kind)->required()->check(CLI::IsMember({"ord2", "unord4", "ord5", "unord6", "npconp8"}));
    c->add_option("--class", class_text, "NL, P, NP, coNP or PSPACE");
    c->add_option("--tau", vocab_text, "Target vocabulary")->required();
    c->add_option("--upsilon", upsilon_file, "Distinguished sentence")->check(CLI::ExistingFile);
    c->add_option("--config", config_file, "Configuration of distinguished sentences")->check(CLI::ExistingFile);
  };
  auto resolve = [&](FormKind kind, ComplexityClass cls) {
    if (kind == FormKind::NpConp8) return Formula();
    if (!upsilon_file.empty()) return load_sentence(upsilon_file);
    if (config_file.empty()) throw CLI::RequiredError("--upsilon or --config");
    return UpsilonConfig::load(config_file).sentence(is_ordered(kind), cls);
  };
  auto parse_kind_class = [&] {
    const auto cls = parse_complexity_class(class_text);
    if (!cls) throw CLI::ValidationError("--class", "unknown complexity class " + class_text);
    return std::make_pair(*parse_form_kind(form_kind), *cls);
  };

  auto* form_build = form->add_subcommand("build", "Assemble a canonical form");
  form_common(form_build);
  form_build->add_option("--gamma", gamma_file)->required()->check(CLI::ExistingFile);
  form_build->add_option("--machine", machine_file)->check(CLI::ExistingFile);
  form_build->add_option("--lambda", lambda_file)->check(CLI::ExistingFile);
  add_emit(form_build, {"text", "godel"});
  form_build->callback([&] {
    const auto [kind, cls] = parse_kind_class();
    const bool npconp = kind == FormKind::NpConp8;
    if (npconp && lambda_file.empty()) throw CLI::RequiredError("--lambda");
    if (!npconp && machine_file.empty()) throw CLI::RequiredError("--machine");
    const FormExtra extra = npconp ? FormExtra(load_sentence(lambda_file)) : FormExtra(load_machine(machine_file));
    print_form(build_form(kind, cls, load_sentence(gamma_file), extra, Vocabulary::parse(vocab_text), resolve(kind, cls)),
               emit);
  });

  auto* form_recognize = form->add_subcommand("recognize", "Decide membership in the logic");
  form_common(form_recognize);
  form_recognize->add_option("sentence", sentence_file)->required()->check(CLI::ExistingFile);
  form_recognize->callback([&] {
    const auto [kind, cls] = parse_kind_class();
    const auto r = recognize(kind, cls, load_sentence(sentence_file), Vocabulary::parse(vocab_text), resolve(kind, cls));
    if (r) {
      std::cout << "recognized\n";
      print_components(*r);
    } else {
      std::cout << "not recognized\n";
      result = kFalse;
    }
  });

  auto* form_enum = form->add_subcommand("enumerate", "List sentences of the logic in code order");
  form_common(form_enum);
  form_enum->add_option("--budget", form_budget, "Number of sentences");
  add_emit(form_enum, {"text", "godel"});
  form_enum->callback([&] {
    const auto [kind, cls] = parse_kind_class();
    enumerate_logic(kind, cls, Vocabulary::parse(vocab_text), resolve(kind, cls), form_budget,
                    [&](const CanonicalForm& f) {
                      print_form(f, emit);
                      return true;
                    });
  });

  // valid-upto / modeq-upto
  auto bounded_check = [&](CLI::App* c) {
    c->add_option("--vocab", vocab_text)->required();
    add_nmax(c);
    add_jobs(c);
    add_budget(c);
    c->add_option("--samples", samples, "Check this many random structures of size nmax instead");
    c->add_option("--seed", seed, "Seed for --samples");
  };
  auto* valid = app.add_subcommand("valid-upto", "Least structure falsifying a sentence");
  valid->add_option("sentence", sentence_file)->required()->check(CLI::ExistingFile);
  bounded_check(valid);
  valid->callback([&] {
    const auto vocab = Vocabulary::parse(vocab_text);
    const auto f = load_sentence(sentence_file);
    std::optional<Structure> w;
    if (samples > 0) {
      const ModelChecker check(f, vocab, eval_options());
      w = sample_first(vocab, nmax, samples, seed, [&](const Structure& a) { return !check(a); });
    } else {
      w = valid_upto(f, vocab, nmax, eval_options(), jobs);
    }
    print_witness(w);
    result = w ? kFalse : kTrue;
  });
  auto* modeq = app.add_subcommand("modeq-upto", "Least structure where two sentences disagree");
  modeq->add_option("first", sentence_file)->required()->check(CLI::ExistingFile);
  modeq->add_option("second", other_file)->required()->check(CLI::ExistingFile);
  bounded_check(modeq);
  modeq->callback([&] {
    const auto vocab = Vocabulary::parse(vocab_text);
    const auto f = load_sentence(sentence_file);
    const auto g = load_sentence(other_file);
    std::optional<Structure> w;
    if (samples > 0) {
      const ModelChecker cf(f, vocab, eval_options());
      const ModelChecker cg(g, vocab, eval_options());
      w = sample_first(vocab, nmax, samples, seed, [&](const Structure& a) { return cf(a) != cg(a); });
    } else {
      w = mod_eq_upto(f, g, vocab, nmax, eval_options(), jobs);
    }
    print_witness(w);
    result = w ? kFalse : kTrue;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const fmw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return result;
}

// Command-line front end for the burnside engine. Talks to the engine
// exclusively through the C API in burnside.h.
//
// Exit codes: 0 = found/verified, 1 = unknown (budget exhausted or nothing
// to report), 2 = invalid input.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "burnside.h"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitUnknown = 1;
constexpr int kExitInvalid = 2;

struct StringDeleter {
  void operator()(char* s) const { bnd_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct WordDeleter {
  void operator()(bnd_word* w) const { bnd_word_free(w); }
};
using Word = std::unique_ptr<bnd_word, WordDeleter>;

struct SeqDeleter {
  void operator()(bnd_moveseq* s) const { bnd_moveseq_free(s); }
};
using MoveSeq = std::unique_ptr<bnd_moveseq, SeqDeleter>;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitInvalid);
}

void require_ok(bnd_status status, const char* what) {
  if (status != BND_OK) die(std::string(what) + ": " + bnd_last_error());
}

Word parse_word_or_die(const std::string& text, int32_t rank) {
  bnd_word* w = nullptr;
  require_ok(bnd_word_parse(text.c_str(), rank, &w), "bad word");
  return Word(w);
}

std::string word_text(const bnd_word* w) {
  char* s = nullptr;
  require_ok(bnd_word_text(w, &s), "word text");
  ApiString holder(s);
  return std::string(holder.get());
}

struct GlobalOptions {
  int32_t rank = 2;
  int32_t exponent = 5;
  std::string xi = "1";
  std::int64_t max_moves = 12;
  std::int64_t max_len = 512;
  std::int64_t max_states = 200000;
  std::string format = "human";

  bnd_params params() const {
    bnd_params p{};
    p.rank = rank;
    p.exponent = exponent;
    require_ok(bnd_decimal_to_rational(xi.c_str(), &p.xi_num, &p.xi_den), "bad --xi");
    return p;
  }

  bnd_budget budget() const {
    bnd_budget b{};
    b.max_moves = max_moves;
    b.max_word_length = max_len;
    b.max_states = max_states;
    return b;
  }

  bool records() const { return format == "records"; }
};

nlohmann::ordered_json sequence_json(const bnd_moveseq* seq) {
  char* rendered = nullptr;
  require_ok(bnd_moveseq_render(seq, &rendered), "render");
  ApiString holder(rendered);
  return nlohmann::ordered_json::parse(holder.get());
}

void print_sequence_human(const bnd_moveseq* seq, std::ostream& os) {
  char* start = nullptr;
  char* end = nullptr;
  require_ok(bnd_moveseq_start(seq, &start), "sequence start");
  ApiString start_holder(start);
  require_ok(bnd_moveseq_end(seq, &end), "sequence end");
  ApiString end_holder(end);
  os << "start: \"" << start << "\"\n";
  const size_t count = bnd_moveseq_size(seq);
  for (size_t i = 0; i < count; ++i) {
    int64_t prefix_len = 0;
    int64_t exponent = 0;
    char* base = nullptr;
    require_ok(bnd_moveseq_step(seq, i, &prefix_len, &base, &exponent), "sequence step");
    ApiString base_holder(base);
    os << "step " << (i + 1) << ": prefix_len=" << prefix_len << " base=" << base
       << " exponent=" << exponent << "\n";
  }
  os << "end: \"" << end << "\"\n";
}

// Runs verification and refuses to print an unaudited certificate.
void verify_or_die(const bnd_moveseq* seq, const bnd_params& params) {
  char* report = nullptr;
  const bnd_status status = bnd_moveseq_verify(seq, &params, &report);
  ApiString holder(report);
  if (status != BND_OK) die(std::string("certificate failed verification: ") + holder.get());
}

int cmd_reduce(const GlobalOptions& opt, const std::vector<std::string>& words,
               const std::string& file) {
  std::vector<std::string> inputs = words;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) die("cannot open file: " + file);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      inputs.push_back(line);
    }
  }
  for (const std::string& text : inputs) {
    Word w = parse_word_or_die(text, opt.rank);
    std::cout << word_text(w.get()) << "\n";
  }
  return kExitFound;
}

int cmd_scan(const GlobalOptions& opt, const std::string& text, std::int64_t min_exp) {
  Word w = parse_word_or_die(text, opt.rank);
  bnd_scan* scan = nullptr;
  require_ok(bnd_scan_factorizations(w.get(), min_exp, &scan), "scan");
  std::unique_ptr<bnd_scan, decltype(&bnd_scan_free)> holder(scan, bnd_scan_free);
  const size_t count = bnd_scan_size(scan);
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (size_t i = 0; i < count; ++i) {
    int64_t prefix_len = 0;
    int64_t exponent = 0;
    char* base = nullptr;
    require_ok(bnd_scan_entry(scan, i, &prefix_len, &base, &exponent), "scan entry");
    ApiString base_holder(base);
    if (opt.records()) {
      records.push_back({{"prefix_len", prefix_len}, {"base", base}, {"exponent", exponent}});
    } else {
      std::cout << "prefix_len=" << prefix_len << " base=" << base << " exponent=" << exponent
                << "\n";
    }
  }
  if (opt.records()) std::cout << records.dump(2) << "\n";
  return count > 0 ? kExitFound : kExitUnknown;
}

int cmd_trivialize(const GlobalOptions& opt, const std::string& text) {
  Word w = parse_word_or_die(text, opt.rank);
  const bnd_params params = opt.params();
  const bnd_budget budget = opt.budget();
  bnd_moveseq* seq = nullptr;
  const bnd_status status = bnd_trivialize(w.get(), &params, &budget, &seq);
  if (status == BND_UNKNOWN) {
    std::cout << "UNKNOWN\n";
    return kExitUnknown;
  }
  require_ok(status, "trivialize");
  MoveSeq holder(seq);
  verify_or_die(seq, params);
  if (opt.records()) {
    std::cout << sequence_json(seq).dump(2) << "\n";
  } else {
    print_sequence_human(seq, std::cout);
    std::cout << "verified: true\n";
  }
  return kExitFound;
}

int cmd_equal(const GlobalOptions& opt, const std::string& left, const std::string& right) {
  Word g = parse_word_or_die(left, opt.rank);
  Word h = parse_word_or_die(right, opt.rank);
  const bnd_params params = opt.params();
  const bnd_budget budget = opt.budget();
  bnd_moveseq* seq_g = nullptr;
  bnd_moveseq* seq_h = nullptr;
  const bnd_status status = bnd_identify(g.get(), h.get(), &params, &budget, &seq_g, &seq_h);
  if (status == BND_UNKNOWN) {
    std::cout << "UNKNOWN\n";
    return kExitUnknown;
  }
  require_ok(status, "equal");
  MoveSeq holder_g(seq_g);
  MoveSeq holder_h(seq_h);
  verify_or_die(seq_g, params);
  verify_or_die(seq_h, params);
  if (opt.records()) {
    nlohmann::ordered_json out;
    out["left"] = sequence_json(seq_g);
    out["right"] = sequence_json(seq_h);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "left sequence:\n";
    print_sequence_human(seq_g, std::cout);
    std::cout << "right sequence:\n";
    print_sequence_human(seq_h, std::cout);
    std::cout << "verified: true\n";
  }
  return kExitFound;
}

int cmd_orbit(const GlobalOptions& opt, const std::string& mapping, const std::string& seed,
              std::int64_t steps, std::int64_t power_free, std::int64_t thue_morse_len) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  auto emit = [&](std::int64_t k, const bnd_word* w) {
    int32_t flag = -1;
    if (power_free >= 2) {
      require_ok(bnd_word_is_power_free(w, power_free, &flag), "power-free check");
    }
    const std::string text = word_text(w);
    if (opt.records()) {
      nlohmann::ordered_json rec{{"k", k}, {"word", text}};
      if (flag >= 0) rec["power_free"] = flag == 1;
      records.push_back(std::move(rec));
    } else {
      std::cout << "k=" << k << ": " << text;
      if (flag >= 0) std::cout << "  power-free(" << power_free << ")=" << (flag ? "yes" : "no");
      std::cout << "\n";
    }
  };

  if (thue_morse_len >= 0) {
    bnd_word* tm = nullptr;
    require_ok(bnd_word_thue_morse(thue_morse_len, &tm), "thue-morse");
    Word holder(tm);
    emit(0, tm);
  } else {
    if (mapping.empty()) die("orbit needs a MAPPING argument (or --thue-morse)");
    bnd_endo* endo = nullptr;
    require_ok(bnd_endo_parse(mapping.c_str(), opt.rank, &endo), "bad mapping");
    std::unique_ptr<bnd_endo, decltype(&bnd_endo_free)> endo_holder(endo, bnd_endo_free);
    Word current = parse_word_or_die(seed, opt.rank);
    emit(0, current.get());
    for (std::int64_t k = 1; k <= steps; ++k) {
      bnd_word* next = nullptr;
      require_ok(bnd_endo_apply(endo, current.get(), &next), "apply");
      current.reset(next);
      emit(k, current.get());
    }
  }
  if (opt.records()) std::cout << records.dump(2) << "\n";
  return kExitFound;
}

int cmd_mu(double r0, std::int64_t grid) {
  char* table = nullptr;
  int32_t all_pass = 0;
  require_ok(bnd_mu_check(r0, static_cast<int32_t>(grid), &table, &all_pass), "mu");
  ApiString holder(table);
  std::cout << holder.get();
  std::cout << (all_pass ? "all properties pass\n" : "PROPERTY VIOLATION\n");
  return all_pass ? kExitFound : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"burnside - elementary-move certificates in free Burnside quotients"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opt;
  app.add_option("--rank", opt.rank, "rank of the free group (1..26)")->capture_default_str();
  app.add_option("--n", opt.exponent, "exponent n (odd, >= 3)")->capture_default_str();
  app.add_option("--xi", opt.xi, "slack xi in the threshold n/2 - xi (decimal)")
      ->capture_default_str();
  app.add_option("--max-moves", opt.max_moves, "search: maximum moves")->capture_default_str();
  app.add_option("--max-len", opt.max_len, "search: maximum word length")->capture_default_str();
  app.add_option("--max-states", opt.max_states, "search: maximum expanded states")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format: human | records")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "freely reduce words");
  std::vector<std::string> reduce_words;
  std::string reduce_file;
  reduce->add_option("words", reduce_words, "words to reduce");
  reduce->add_option("--file", reduce_file, "read one word per line");

  auto* scan = app.add_subcommand("scan", "list power factorizations w = p u^m s");
  std::string scan_word;
  std::int64_t scan_min_exp = 2;
  scan->add_option("word", scan_word, "word to scan")->required();
  scan->add_option("--min-exp", scan_min_exp, "minimum exponent m")->capture_default_str();

  auto* trivialize = app.add_subcommand("trivialize", "search for a move sequence to the empty word");
  std::string trivialize_word;
  trivialize->add_option("word", trivialize_word, "word to trivialize")->required();

  auto* equal = app.add_subcommand("equal", "search for move sequences joining two words");
  std::string equal_left;
  std::string equal_right;
  equal->add_option("left", equal_left, "first word")->required();
  equal->add_option("right", equal_right, "second word")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "iterate an endomorphism, e.g. \"a=ab; b=a\"");
  std::string orbit_mapping;
  std::string orbit_seed = "a";
  std::int64_t orbit_steps = 0;
  std::int64_t orbit_power_free = 0;
  std::int64_t orbit_thue_morse = -1;
  orbit_cmd->add_option("mapping", orbit_mapping, "generator images, e.g. \"a=ab; b=a\"");
  orbit_cmd->add_option("seed", orbit_seed, "start word")->capture_default_str();
  orbit_cmd->add_option("steps", orbit_steps, "number of iterations")->capture_default_str();
  orbit_cmd->add_option("--check-power-free", orbit_power_free,
                        "flag each entry as p-power-free for this p");
  orbit_cmd->add_option("--thue-morse", orbit_thue_morse,
                        "emit the Thue-Morse prefix of this length instead of iterating");

  auto* mu_cmd = app.add_subcommand("mu", "check the cone metric function mu on a grid");
  double mu_r0 = 1.0;
  std::int64_t mu_grid = 200;
  mu_cmd->add_option("--r0", mu_r0, "cone radius")->capture_default_str();
  mu_cmd->add_option("--grid", mu_grid, "grid points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (reduce->parsed()) return cmd_reduce(opt, reduce_words, reduce_file);
  if (scan->parsed()) return cmd_scan(opt, scan_word, scan_min_exp);
  if (trivialize->parsed()) return cmd_trivialize(opt, trivialize_word);
  if (equal->parsed()) return cmd_equal(opt, equal_left, equal_right);
  if (orbit_cmd->parsed()) {
    return cmd_orbit(opt, orbit_mapping, orbit_seed, orbit_steps, orbit_power_free,
                     orbit_thue_morse);
  }
  if (mu_cmd->parsed()) return cmd_mu(mu_r0, mu_grid);
  return kExitInvalid;
}

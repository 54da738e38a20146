#include "burnside.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

#include "burnside/cone_metric.hpp"
#include "burnside/endomorphism.hpp"
#include "burnside/moves.hpp"
#include "burnside/params.hpp"
#include "burnside/repetition.hpp"
#include "burnside/word.hpp"

struct bnd_word {
  burnside::FreeWord w;
};

struct bnd_scan {
  std::vector<burnside::PowerFactorization> items;
};

struct bnd_endo {
  burnside::Endomorphism e;
};

struct bnd_moveseq {
  burnside::MoveSequence seq;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bnd_status fail(bnd_status code, const char* message) {
  g_last_error = message;
  return code;
}

// Runs fn, translating exceptions to status codes.
template <typename Fn>
bnd_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(BND_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(BND_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BND_ERR_INTERNAL, "unknown failure");
  }
}

burnside::BurnsideParams convert(const bnd_params* p) {
  if (p == nullptr) throw std::invalid_argument("null params");
  burnside::BurnsideParams out;
  out.rank = p->rank;
  out.exponent = p->exponent;
  out.xi = burnside::Rational::of(p->xi_num, p->xi_den);
  out.validate();
  return out;
}

burnside::SearchBudget convert(const bnd_budget* b) {
  if (b == nullptr) throw std::invalid_argument("null budget");
  burnside::SearchBudget out;
  out.max_moves = b->max_moves;
  out.max_word_length = b->max_word_length;
  out.max_states = b->max_states;
  out.validate();
  return out;
}

}  // namespace

extern "C" {

const char* bnd_last_error(void) { return g_last_error.c_str(); }

void bnd_string_free(char* s) { std::free(s); }

bnd_status bnd_word_parse(const char* text, int32_t rank, bnd_word** out) {
  return guarded([&]() {
    if (text == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = new bnd_word{burnside::FreeWord::parse(text, rank)};
    return BND_OK;
  });
}

void bnd_word_free(bnd_word* w) { delete w; }

bnd_status bnd_word_text(const bnd_word* w, char** out) {
  return guarded([&]() {
    if (w == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = dup_string(w->w.str());
    return BND_OK;
  });
}

int64_t bnd_word_length(const bnd_word* w) {
  return w == nullptr ? -1 : static_cast<int64_t>(w->w.size());
}

int32_t bnd_word_rank(const bnd_word* w) { return w == nullptr ? -1 : w->w.rank(); }

bnd_status bnd_word_multiply(const bnd_word* a, const bnd_word* b, bnd_word** out) {
  return guarded([&]() {
    if (a == nullptr || b == nullptr || out == nullptr) {
      return fail(BND_ERR_INVALID, "null argument");
    }
    *out = new bnd_word{burnside::multiply(a->w, b->w)};
    return BND_OK;
  });
}

bnd_status bnd_word_invert(const bnd_word* w, bnd_word** out) {
  return guarded([&]() {
    if (w == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = new bnd_word{burnside::invert(w->w)};
    return BND_OK;
  });
}

bnd_status bnd_word_power(const bnd_word* w, int64_t k, bnd_word** out) {
  return guarded([&]() {
    if (w == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = new bnd_word{burnside::power(w->w, k)};
    return BND_OK;
  });
}

bnd_status bnd_word_is_power_free(const bnd_word* w, int64_t p, int32_t* out_flag) {
  return guarded([&]() {
    if (w == nullptr || out_flag == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out_flag = burnside::is_power_free(w->w, p) ? 1 : 0;
    return BND_OK;
  });
}

bnd_status bnd_word_thue_morse(int64_t length, bnd_word** out) {
  return guarded([&]() {
    if (out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = new bnd_word{burnside::thue_morse(length)};
    return BND_OK;
  });
}

bnd_status bnd_scan_factorizations(const bnd_word* w, int64_t min_exponent, bnd_scan** out) {
  return guarded([&]() {
    if (w == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = new bnd_scan{burnside::find_power_factorizations(w->w, min_exponent)};
    return BND_OK;
  });
}

void bnd_scan_free(bnd_scan* s) { delete s; }

size_t bnd_scan_size(const bnd_scan* s) { return s == nullptr ? 0 : s->items.size(); }

bnd_status bnd_scan_entry(const bnd_scan* s, size_t i, int64_t* prefix_len, char** base_text,
                          int64_t* exponent) {
  return guarded([&]() {
    if (s == nullptr || i >= s->items.size()) return fail(BND_ERR_INVALID, "bad scan index");
    const burnside::PowerFactorization& f = s->items[i];
    if (prefix_len != nullptr) *prefix_len = f.prefix_len;
    if (exponent != nullptr) *exponent = f.exponent;
    if (base_text != nullptr) *base_text = dup_string(f.base.str());
    return BND_OK;
  });
}

bnd_status bnd_endo_parse(const char* mapping, int32_t rank, bnd_endo** out) {
  return guarded([&]() {
    if (mapping == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = new bnd_endo{burnside::Endomorphism::parse(mapping, rank)};
    return BND_OK;
  });
}

void bnd_endo_free(bnd_endo* e) { delete e; }

bnd_status bnd_endo_text(const bnd_endo* e, char** out) {
  return guarded([&]() {
    if (e == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = dup_string(e->e.str());
    return BND_OK;
  });
}

bnd_status bnd_endo_apply(const bnd_endo* e, const bnd_word* w, bnd_word** out) {
  return guarded([&]() {
    if (e == nullptr || w == nullptr || out == nullptr) {
      return fail(BND_ERR_INVALID, "null argument");
    }
    *out = new bnd_word{burnside::apply(e->e, w->w)};
    return BND_OK;
  });
}

bnd_status bnd_endo_limit_prefix(const bnd_endo* e, const char* seed, int64_t length,
                                 bnd_word** out) {
  return guarded([&]() {
    if (e == nullptr || seed == nullptr || out == nullptr) {
      return fail(BND_ERR_INVALID, "null argument");
    }
    if (std::strlen(seed) != 1) {
      return fail(BND_ERR_INVALID, "seed must be a single generator letter");
    }
    const burnside::Letter l = burnside::letter_from_char(seed[0], e->e.rank);
    if (l.sign < 0) return fail(BND_ERR_INVALID, "seed must be a generator, not an inverse");
    *out = new bnd_word{burnside::limit_prefix(e->e, l, length)};
    return BND_OK;
  });
}

bnd_status bnd_trivialize(const bnd_word* w, const bnd_params* p, const bnd_budget* b,
                          bnd_moveseq** out) {
  return guarded([&]() {
    if (w == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    auto seq = burnside::search_trivialization(w->w, convert(p), convert(b));
    if (!seq.has_value()) return fail(BND_UNKNOWN, "search budget exhausted");
    *out = new bnd_moveseq{std::move(*seq)};
    return BND_OK;
  });
}

bnd_status bnd_identify(const bnd_word* g, const bnd_word* h, const bnd_params* p,
                        const bnd_budget* b, bnd_moveseq** out_g, bnd_moveseq** out_h) {
  return guarded([&]() {
    if (g == nullptr || h == nullptr || out_g == nullptr || out_h == nullptr) {
      return fail(BND_ERR_INVALID, "null argument");
    }
    auto pair = burnside::search_identification(g->w, h->w, convert(p), convert(b));
    if (!pair.has_value()) return fail(BND_UNKNOWN, "search budget exhausted");
    *out_g = new bnd_moveseq{std::move(pair->first)};
    *out_h = new bnd_moveseq{std::move(pair->second)};
    return BND_OK;
  });
}

void bnd_moveseq_free(bnd_moveseq* s) { delete s; }

size_t bnd_moveseq_size(const bnd_moveseq* s) { return s == nullptr ? 0 : s->seq.steps.size(); }

bnd_status bnd_moveseq_step(const bnd_moveseq* s, size_t i, int64_t* prefix_len, char** base_text,
                            int64_t* exponent) {
  return guarded([&]() {
    if (s == nullptr || i >= s->seq.steps.size()) return fail(BND_ERR_INVALID, "bad step index");
    const burnside::PowerFactorization& f = s->seq.steps[i].move.factorization;
    if (prefix_len != nullptr) *prefix_len = f.prefix_len;
    if (exponent != nullptr) *exponent = f.exponent;
    if (base_text != nullptr) *base_text = dup_string(f.base.str());
    return BND_OK;
  });
}

bnd_status bnd_moveseq_start(const bnd_moveseq* s, char** out) {
  return guarded([&]() {
    if (s == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = dup_string(s->seq.start.str());
    return BND_OK;
  });
}

bnd_status bnd_moveseq_end(const bnd_moveseq* s, char** out) {
  return guarded([&]() {
    if (s == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = dup_string(s->seq.end.str());
    return BND_OK;
  });
}

bnd_status bnd_moveseq_render(const bnd_moveseq* s, char** out_json) {
  return guarded([&]() {
    if (s == nullptr || out_json == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out_json = dup_string(burnside::to_json(s->seq));
    return BND_OK;
  });
}

bnd_status bnd_moveseq_parse(const char* json, bnd_moveseq** out) {
  return guarded([&]() {
    if (json == nullptr || out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = new bnd_moveseq{burnside::move_sequence_from_json(json)};
    return BND_OK;
  });
}

bnd_status bnd_moveseq_verify(const bnd_moveseq* s, const bnd_params* p, char** report_out) {
  return guarded([&]() {
    if (s == nullptr) return fail(BND_ERR_INVALID, "null argument");
    const burnside::VerificationReport report = burnside::verify_sequence(s->seq, convert(p));
    if (report_out != nullptr) *report_out = dup_string(report.str());
    if (!report.ok) return fail(BND_ERR_VERIFY, report.str().c_str());
    return BND_OK;
  });
}

bnd_status bnd_mu(double t, double r0, double* out) {
  return guarded([&]() {
    if (out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = burnside::mu(t, burnside::ConeParams{r0});
    return BND_OK;
  });
}

bnd_status bnd_cone_distance(double r, double rp, double dy, double r0, double* out) {
  return guarded([&]() {
    if (out == nullptr) return fail(BND_ERR_INVALID, "null argument");
    *out = burnside::cone_distance(r, rp, dy, burnside::ConeParams{r0});
    return BND_OK;
  });
}

bnd_status bnd_mu_check(double r0, int32_t grid, char** table_out, int32_t* all_pass) {
  return guarded([&]() {
    const burnside::PropertyReport report =
        burnside::check_mu_properties(burnside::ConeParams{r0}, grid);
    if (table_out != nullptr) *table_out = dup_string(report.table());
    if (all_pass != nullptr) *all_pass = report.all_pass() ? 1 : 0;
    return BND_OK;
  });
}

bnd_status bnd_decimal_to_rational(const char* text, int64_t* num, int64_t* den) {
  return guarded([&]() {
    if (text == nullptr || num == nullptr || den == nullptr) {
      return fail(BND_ERR_INVALID, "null argument");
    }
    const burnside::Rational r = burnside::Rational::parse_decimal(text);
    *num = r.num;
    *den = r.den;
    return BND_OK;
  });
}

}  // extern "C"

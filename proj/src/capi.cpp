#include "fermataudit/fermataudit.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>
#include <vector>

#include "fermataudit/audit.hpp"
#include "fermataudit/errors.hpp"

using namespace fermataudit;

struct fa_doc {
  std::variant<AuditReport, std::vector<GridEntry>, TripleReport, SearchResult, ReductionResult,
               DiagonalResult>
      value;
};

namespace {

thread_local std::string t_last_error;

fa_status fail(fa_status status, const char* what) {
  t_last_error = what;
  return status;
}

template <typename Fn>
fa_status guarded(fa_doc** out, Fn&& fn) {
  if (out == nullptr) {
    return fail(FA_ERR_PARAMETER, "output handle is null");
  }
  *out = nullptr;
  try {
    *out = new fa_doc{std::forward<Fn>(fn)()};
    return FA_OK;
  } catch (const parameter_error& e) {
    return fail(FA_ERR_PARAMETER, e.what());
  } catch (const domain_error& e) {
    return fail(FA_ERR_PARAMETER, e.what());
  } catch (const tolerance_error& e) {
    return fail(FA_ERR_TOLERANCE, e.what());
  } catch (const std::exception& e) {
    return fail(FA_ERR_INTERNAL, e.what());
  }
}

Rational parse_epsilon(const char* epsilon) {
  if (epsilon == nullptr) {
    return default_epsilon();
  }
  Rational eps = Rational::parse(epsilon);
  if (eps.sign() <= 0) {
    throw parameter_error("epsilon must be > 0");
  }
  return eps;
}

unsigned checked_unsigned(int64_t value, const char* what) {
  if (value < 0 || value > 1'000'000'000LL) {
    throw parameter_error(std::string(what) + " out of supported range");
  }
  return static_cast<unsigned>(value);
}

char* copy_string(const std::string& s) {
  char* buffer = static_cast<char*>(std::malloc(s.size() + 1));
  if (buffer == nullptr) {
    return nullptr;
  }
  std::memcpy(buffer, s.c_str(), s.size() + 1);
  return buffer;
}

fa_status render_string(const std::string& text, char** out) {
  if (out == nullptr) {
    return fail(FA_ERR_PARAMETER, "output buffer is null");
  }
  *out = copy_string(text);
  if (*out == nullptr) {
    return fail(FA_ERR_INTERNAL, "allocation failed");
  }
  return FA_OK;
}

ReportFormat to_format(fa_format format) {
  return format == FA_FORMAT_TEXT ? ReportFormat::text : ReportFormat::json;
}

std::string render_value(const fa_doc& doc, ReportFormat format) {
  return std::visit(
      [format](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, AuditReport>) {
          return render_report(value, format);
        } else if constexpr (std::is_same_v<T, std::vector<GridEntry>>) {
          return render_grid(value, format);
        } else if constexpr (std::is_same_v<T, TripleReport>) {
          return render_triple(value, format);
        } else if constexpr (std::is_same_v<T, SearchResult>) {
          return render_search(value, format);
        } else if constexpr (std::is_same_v<T, ReductionResult>) {
          return render_reduction(value, format);
        } else {
          return render_diagonal(value, format);
        }
      },
      doc.value);
}

std::string entry_label(const fa_doc& doc) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, AuditReport>) {
          GridEntry entry;
          entry.p = value.p;
          entry.u = value.u;
          return entry.label();
        } else if constexpr (std::is_same_v<T, std::vector<GridEntry>>) {
          return "grid";
        } else if constexpr (std::is_same_v<T, TripleReport>) {
          return "triple_x" + value.x.str() + "_y" + value.y.str() + "_z" + value.z.str() + "_p" +
                 std::to_string(value.p);
        } else if constexpr (std::is_same_v<T, SearchResult>) {
          return "search_p" + std::to_string(value.p) + "_max" + value.bound.str();
        } else if constexpr (std::is_same_v<T, ReductionResult>) {
          return "reduce_n" + value.n.str();
        } else {
          return "diagonal_n" + std::to_string(value.n) + "_max" + value.xmax.str();
        }
      },
      doc.value);
}

}  // namespace

extern "C" {

const char* fa_version(void) { return "0.1.0"; }

const char* fa_last_error(void) { return t_last_error.c_str(); }

fa_status fa_audit_instance(int64_t p, const char* u, const char* epsilon, fa_doc** out) {
  return guarded(out, [&] {
    if (u == nullptr) {
      throw parameter_error("u is required");
    }
    FamilyParams params(checked_unsigned(p, "p"), Rational::parse(u));
    return audit_instance(params, parse_epsilon(epsilon));
  });
}

fa_status fa_audit_grid(const int64_t* ps, size_t ps_len, int64_t u_count, const char* epsilon,
                        fa_doc** out) {
  return guarded(out, [&] {
    if (ps == nullptr || ps_len == 0) {
      throw parameter_error("at least one p is required");
    }
    std::vector<unsigned> primes;
    primes.reserve(ps_len);
    for (size_t i = 0; i < ps_len; ++i) {
      primes.push_back(checked_unsigned(ps[i], "p"));
    }
    return audit_grid(primes, checked_unsigned(u_count, "u_count"), parse_epsilon(epsilon));
  });
}

fa_status fa_audit_triple(int64_t x, int64_t y, int64_t z, int64_t p, fa_doc** out) {
  return guarded(out, [&] {
    return audit_triple(
        FermatTriple(BigInt(x), BigInt(y), BigInt(z), checked_unsigned(p, "p")));
  });
}

fa_status fa_search(int64_t p, int64_t bound, fa_doc** out) {
  return guarded(out,
                 [&] { return brute_force_search(checked_unsigned(p, "p"), BigInt(bound)); });
}

fa_status fa_reduce_exponent(int64_t n, fa_doc** out) {
  return guarded(out, [&] { return reduce_exponent(BigInt(n)); });
}

fa_status fa_diagonal_check(int64_t n, int64_t xmax, fa_doc** out) {
  return guarded(out, [&] { return diagonal_check(checked_unsigned(n, "n"), BigInt(xmax)); });
}

fa_status fa_doc_render(const fa_doc* doc, fa_format format, char** out) {
  if (doc == nullptr) {
    return fail(FA_ERR_PARAMETER, "document handle is null");
  }
  try {
    return render_string(render_value(*doc, to_format(format)), out);
  } catch (const std::exception& e) {
    return fail(FA_ERR_INTERNAL, e.what());
  }
}

size_t fa_doc_entry_count(const fa_doc* doc) {
  if (doc == nullptr) {
    return 0;
  }
  if (const auto* grid = std::get_if<std::vector<GridEntry>>(&doc->value)) {
    return grid->size();
  }
  return 1;
}

fa_status fa_doc_entry_render(const fa_doc* doc, size_t index, fa_format format, char** out) {
  if (doc == nullptr) {
    return fail(FA_ERR_PARAMETER, "document handle is null");
  }
  try {
    if (const auto* grid = std::get_if<std::vector<GridEntry>>(&doc->value)) {
      if (index >= grid->size()) {
        return fail(FA_ERR_PARAMETER, "entry index out of range");
      }
      return render_string(render_grid_entry((*grid)[index], to_format(format)), out);
    }
    if (index != 0) {
      return fail(FA_ERR_PARAMETER, "entry index out of range");
    }
    return render_string(render_value(*doc, to_format(format)), out);
  } catch (const std::exception& e) {
    return fail(FA_ERR_INTERNAL, e.what());
  }
}

fa_status fa_doc_entry_label(const fa_doc* doc, size_t index, char** out) {
  if (doc == nullptr) {
    return fail(FA_ERR_PARAMETER, "document handle is null");
  }
  try {
    if (const auto* grid = std::get_if<std::vector<GridEntry>>(&doc->value)) {
      if (index >= grid->size()) {
        return fail(FA_ERR_PARAMETER, "entry index out of range");
      }
      return render_string((*grid)[index].label(), out);
    }
    if (index != 0) {
      return fail(FA_ERR_PARAMETER, "entry index out of range");
    }
    return render_string(entry_label(*doc), out);
  } catch (const std::exception& e) {
    return fail(FA_ERR_INTERNAL, e.what());
  }
}

void fa_doc_free(fa_doc* doc) { delete doc; }

void fa_string_free(char* s) { std::free(s); }

}  // extern "C"

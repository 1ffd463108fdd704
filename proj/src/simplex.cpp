#include "simplex.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <exception>
#include <memory>

#include "afm/errors.hpp"

namespace afm::detail {
namespace {

struct Context {
  const std::function<double(const std::vector<double>&)>* f;
  std::vector<double> buf;
  std::exception_ptr error;
};

double trampoline(const gsl_vector* v, void* params) {
  auto* ctx = static_cast<Context*>(params);
  if (ctx->error) return GSL_POSINF;
  for (std::size_t i = 0; i < ctx->buf.size(); ++i) ctx->buf[i] = gsl_vector_get(v, i);
  try {
    return (*ctx->f)(ctx->buf);
  } catch (...) {
    ctx->error = std::current_exception();
    return GSL_POSINF;
  }
}

struct VecDel {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinDel {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                          std::vector<double> step, double size_tol, int max_iter) {
  const std::size_t n = x0.size();
  if (n == 0 || step.size() != n) throw DomainError("nelder_mead: start and step sizes must match");
  gsl_set_error_handler_off();

  Context ctx{&f, std::vector<double>(n), nullptr};
  gsl_multimin_function fn{&trampoline, n, &ctx};

  std::unique_ptr<gsl_vector, VecDel> x(gsl_vector_alloc(n)), ss(gsl_vector_alloc(n));
  for (std::size_t i = 0; i < n; ++i) {
    gsl_vector_set(x.get(), i, x0[i]);
    gsl_vector_set(ss.get(), i, step[i]);
  }
  std::unique_ptr<gsl_multimin_fminimizer, MinDel> s(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  if (gsl_multimin_fminimizer_set(s.get(), &fn, x.get(), ss.get()) != GSL_SUCCESS)
    throw NumericalError("nelder_mead: could not initialise simplex");
  if (ctx.error) std::rethrow_exception(ctx.error);

  SimplexResult out;
  int status = GSL_CONTINUE;
  while (status == GSL_CONTINUE && out.iterations < max_iter) {
    ++out.iterations;
    if (gsl_multimin_fminimizer_iterate(s.get()) != GSL_SUCCESS) break;
    if (ctx.error) std::rethrow_exception(ctx.error);
    status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(s.get()), size_tol);
  }
  out.converged = status == GSL_SUCCESS;
  out.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.x[i] = gsl_vector_get(s->x, i);
  out.f = s->fval;
  return out;
}

}  // namespace afm::detail

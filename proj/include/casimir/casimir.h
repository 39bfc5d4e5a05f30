#ifndef CASIMIR_CASIMIR_H
#define CASIMIR_CASIMIR_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CASIMIR_BUILDING_LIBRARY)
#define CASIMIR_API __attribute__((visibility("default")))
#else
#define CASIMIR_API
#endif

typedef enum {
  CASIMIR_OK = 0,
  CASIMIR_ERR_DOMAIN = 1,
  CASIMIR_ERR_NONCONVERGENCE = 2,
  CASIMIR_ERR_PRECISION_LOSS = 3,
  CASIMIR_ERR_OUT_OF_REGIME = 4,
  CASIMIR_ERR_UNSUPPORTED_DIMENSION = 5,
  CASIMIR_ERR_POLE = 6,
  CASIMIR_ERR_NULL_ARGUMENT = 7,
  CASIMIR_ERR_INTERNAL = 8
} casimir_status;

typedef enum { CASIMIR_PC = 0, CASIMIR_IP = 1 } casimir_bc;
typedef enum { CASIMIR_TE = 0, CASIMIR_TM = 1, CASIMIR_TOTAL = 2 } casimir_channel;
typedef enum { CASIMIR_ZERO_T = 0, CASIMIR_HIGH_T = 1 } casimir_regime;
typedef enum { CASIMIR_LOG_EPS2 = 0, CASIMIR_LOG_AS_PRINTED = 1 } casimir_log_reading;

typedef struct casimir_geometry casimir_geometry;
typedef struct casimir_policy casimir_policy;
typedef struct casimir_series casimir_series;
typedef struct casimir_selftest casimir_selftest;

#define CASIMIR_WARNING_CHARS 512

typedef struct {
  double value;
  double te;
  double tm;
  double error_estimate;
  double temperature;
  long l_used;
  long p_used;
  int warning_count;
  /* warnings joined by "; ", truncated */
  char warnings[CASIMIR_WARNING_CHARS];
} casimir_energy_result;

typedef struct {
  double value;
  double error_estimate;
  double step;
  int warning_count;
  char warnings[CASIMIR_WARNING_CHARS];
} casimir_force_result;

CASIMIR_API const char* casimir_version(void);
CASIMIR_API const char* casimir_status_string(casimir_status status);
/* Message of the last failure on the calling thread. */
CASIMIR_API const char* casimir_last_error(void);

CASIMIR_API casimir_status casimir_geometry_create(double a1, double a2, int dim, casimir_geometry** out);
CASIMIR_API casimir_status casimir_geometry_from_epsilon(double eps, int dim, double a1,
                                                         casimir_geometry** out);
CASIMIR_API void casimir_geometry_destroy(casimir_geometry* g);
CASIMIR_API casimir_status casimir_geometry_info(const casimir_geometry* g, double* a1, double* a2,
                                                 int* dim, double* eps);

CASIMIR_API casimir_status casimir_policy_create(casimir_policy** out);
CASIMIR_API void casimir_policy_destroy(casimir_policy* p);
CASIMIR_API casimir_status casimir_policy_set_rel_tol(casimir_policy* p, double rel_tol);
CASIMIR_API casimir_status casimir_policy_set_l_max(casimir_policy* p, long l_max);
CASIMIR_API casimir_status casimir_policy_set_p_max(casimir_policy* p, long p_max);
CASIMIR_API casimir_status casimir_policy_set_tail_extrapolation(casimir_policy* p, int on);
CASIMIR_API casimir_status casimir_policy_set_threads(casimir_policy* p, int threads);

/* policy may be NULL for defaults. On CASIMIR_ERR_NONCONVERGENCE the result holds the partial sum. */
CASIMIR_API casimir_status casimir_zero_t_energy(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                                 casimir_channel channel, const casimir_policy* policy,
                                                 casimir_energy_result* out);
CASIMIR_API casimir_status casimir_free_energy(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                               casimir_channel channel, double temperature,
                                               const casimir_policy* policy, casimir_energy_result* out);
CASIMIR_API casimir_status casimir_energy(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                          casimir_channel channel, double temperature,
                                          const casimir_policy* policy, casimir_energy_result* out);
CASIMIR_API casimir_status casimir_classical_term(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                                  casimir_channel channel, const casimir_policy* policy,
                                                  casimir_energy_result* out);
CASIMIR_API casimir_status casimir_thermal_correction(const casimir_geometry* g, casimir_bc inner,
                                                      casimir_bc outer, casimir_channel channel,
                                                      double temperature, const casimir_policy* policy,
                                                      casimir_energy_result* out);
CASIMIR_API casimir_status casimir_force(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                         casimir_channel channel, double temperature,
                                         const casimir_policy* policy, casimir_force_result* out);

CASIMIR_API casimir_status casimir_parallel_plate_density(int dim, casimir_bc inner, casimir_bc outer,
                                                          casimir_regime regime, double d, double temperature,
                                                          double* out);
CASIMIR_API casimir_status casimir_pfa_energy(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                              casimir_regime regime, double temperature,
                                              casimir_channel channel, double* out);

/* High-T series are per unit temperature; evaluate multiplies by temperature.
   reading only matters at D = 3: CASIMIR_LOG_AS_PRINTED selects the bare ln(eps) term of the mixed
   high-T series, and at zero T the eps^2 constants without the fitted shift. */
CASIMIR_API casimir_status casimir_expansion_create(casimir_regime regime, int dim, casimir_bc inner,
                                                    casimir_bc outer, casimir_channel channel,
                                                    casimir_log_reading reading, casimir_series** out);
CASIMIR_API void casimir_expansion_destroy(casimir_series* s);
CASIMIR_API casimir_status casimir_expansion_evaluate(const casimir_series* s, double eps, double a1,
                                                      double temperature, double* out);
CASIMIR_API casimir_status casimir_expansion_prefactor(const casimir_series* s, double eps, double a1,
                                                       double* out);
CASIMIR_API casimir_status casimir_expansion_term_count(const casimir_series* s, int* count);
CASIMIR_API casimir_status casimir_expansion_term(const casimir_series* s, int index, int* power,
                                                  int* log_eps, double* coefficient);

CASIMIR_API casimir_status casimir_thermal_leading(int dim, casimir_bc inner, casimir_channel channel,
                                                   double a1, double temperature, double* out);
CASIMIR_API casimir_status casimir_pfa_thermal_force(int dim, double a1, double temperature, double* out);
CASIMIR_API casimir_status casimir_exact_thermal_force_leading(int dim, casimir_bc inner, double a1,
                                                               double temperature, double* out);

CASIMIR_API casimir_status casimir_selftest_run(int log_reading_fit, int exact_checks, casimir_selftest** out);
CASIMIR_API void casimir_selftest_destroy(casimir_selftest* t);
CASIMIR_API int casimir_selftest_passed(const casimir_selftest* t);
/* Owned by the handle. */
CASIMIR_API const char* casimir_selftest_report(const casimir_selftest* t);
CASIMIR_API casimir_status casimir_selftest_log_reading(const casimir_selftest* t, casimir_log_reading* selected,
                                                        double* improvement, int* decisive);

#ifdef __cplusplus
}
#endif

#endif

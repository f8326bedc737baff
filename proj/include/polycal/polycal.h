/* SPDX-License-Identifier: Apache-2.0 */
#ifndef POLYCAL_POLYCAL_H
#define POLYCAL_POLYCAL_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(POLYCAL_BUILDING_LIBRARY)
#define POLYCAL_API __declspec(dllexport)
#else
#define POLYCAL_API __declspec(dllimport)
#endif
#else
#define POLYCAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum polycal_status {
  POLYCAL_OK = 0,
  POLYCAL_CHECK_FAILED = 1, /* the call ran; the property it tests does not hold */
  POLYCAL_E_INVALID_ARGUMENT = 2,
  POLYCAL_E_DIMENSION = 3,
  POLYCAL_E_DEGENERATE = 4,
  POLYCAL_E_NOT_FOUND = 5,
  POLYCAL_E_PARSE = 6,
  POLYCAL_E_PRECONDITION = 7,
  POLYCAL_E_SOLVER = 8,
  POLYCAL_E_INTERNAL = 9
} polycal_status;

/* A complex together with its designated boundary faces. */
typedef struct polycal_complex polycal_complex;
/* A varifold, bound to its complex and boundary region. */
typedef struct polycal_varifold polycal_varifold;
typedef struct polycal_chain polycal_chain;
typedef struct polycal_group polycal_group;

POLYCAL_API const char* polycal_version(void);

/* Message of the last failed call on this thread; never NULL. */
POLYCAL_API const char* polycal_last_error(void);

/* Every char** output is allocated by the library and released here. */
POLYCAL_API void polycal_string_free(char* s);

/* ---- complexes ---- */
POLYCAL_API polycal_status polycal_complex_from_json(const char* json, polycal_complex** out);
POLYCAL_API polycal_status polycal_complex_to_json(const polycal_complex* k, char** out);
POLYCAL_API void polycal_complex_free(polycal_complex* k);
POLYCAL_API polycal_status polycal_complex_hash(const polycal_complex* k, char** out);
/* Geometry report; CHECK_FAILED when two simplices overlap improperly. */
POLYCAL_API polycal_status polycal_complex_validate(const polycal_complex* k, double tol, char** report);

/* ---- varifolds ---- */
POLYCAL_API polycal_status polycal_varifold_from_json(const polycal_complex* k, const char* json,
                                                      polycal_varifold** out);
POLYCAL_API polycal_status polycal_varifold_to_json(const polycal_varifold* v, char** out);
POLYCAL_API void polycal_varifold_free(polycal_varifold* v);
POLYCAL_API polycal_status polycal_varifold_complex(const polycal_varifold* v, polycal_complex** out);
POLYCAL_API polycal_status polycal_varifold_mass(const polycal_varifold* v, double* out);
/* Barycentric refinement, applied `levels` times. */
POLYCAL_API polycal_status polycal_varifold_refine(const polycal_varifold* v, int levels, polycal_varifold** out);
/* CHECK_FAILED when some interior face is unbalanced. */
POLYCAL_API polycal_status polycal_stationarity(const polycal_varifold* v, double tol, char** report);
POLYCAL_API polycal_status polycal_chainify(const polycal_varifold* v, polycal_chain** out);
/* Minimality certificate; CHECK_FAILED unless the conclusion is
 * calibrated-minimizer. `solver_config` may be NULL. */
POLYCAL_API polycal_status polycal_certify(const polycal_varifold* v, double tol, int with_solver,
                                           const char* solver_config, char** certificate);
/* CHECK_FAILED when some mass ratio drops below 1 - 1e-9. */
POLYCAL_API polycal_status polycal_deform(const polycal_varifold* v, int trials, double magnitude, uint64_t seed,
                                          double tol, char** report);
/* Min-mass solve with boundary d<V> after `refinement` barycentric
 * refinements. The result holds "complex" and "result". */
POLYCAL_API polycal_status polycal_minimize_varifold(const polycal_varifold* v, int refinement,
                                                     const char* solver_config, char** result);

/* ---- chains ---- */
POLYCAL_API polycal_status polycal_chain_from_json(const polycal_complex* k, const char* json, polycal_chain** out);
POLYCAL_API polycal_status polycal_chain_to_json(const polycal_chain* a, char** out);
POLYCAL_API void polycal_chain_free(polycal_chain* a);
POLYCAL_API polycal_status polycal_chain_boundary(const polycal_chain* a, polycal_chain** out);
POLYCAL_API polycal_status polycal_chain_mass(const polycal_chain* a, double* out);
POLYCAL_API polycal_status polycal_chain_phi(const polycal_chain* a, double* out);
POLYCAL_API polycal_status polycal_certify_chain(const polycal_chain* a, double tol, char** certificate);
/* Min-mass m-chain with the given (m-1)-chain as boundary. CHECK_FAILED
 * when the solve did not converge or the boundary is not fillable. */
POLYCAL_API polycal_status polycal_minimize(const polycal_chain* boundary, const char* solver_config, char** result);
POLYCAL_API polycal_status polycal_flatnorm(const polycal_chain* a, const char* solver_config, char** result);

/* ---- coefficient groups ---- */
POLYCAL_API polycal_status polycal_group_from_json(const char* json, polycal_group** out);
POLYCAL_API void polycal_group_free(polycal_group* g);
POLYCAL_API polycal_status polycal_group_norm(const polycal_group* g, const char* element_json, double* out);
/* Subgroups only: all elements of norm at most lambda, as a JSON array. */
POLYCAL_API polycal_status polycal_norm_ball(const polycal_group* g, double lambda, char** out);
POLYCAL_API polycal_status polycal_integrality_check(const polycal_group* g, int* integral);
/* Retags the chain into the subgroup `h`. */
POLYCAL_API polycal_status polycal_retag(const polycal_chain* a, const polycal_group* h, polycal_chain** out);

/* ---- catalog ---- */
/* Writes {"name", "complex", "varifold"}; params may be NULL or a JSON object
 * with "radius", "refinement", and for custom_net_cone "directions",
 * "cells", "weights". */
POLYCAL_API polycal_status polycal_demo(const char* name, const char* params, char** out);

#ifdef __cplusplus
}
#endif

#endif

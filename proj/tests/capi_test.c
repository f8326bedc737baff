/* SPDX-License-Identifier: Apache-2.0 */
/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "polycal/polycal.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static const char* L_COMPLEX =
    "{\"ambient_dim\": 2, \"vertices\": [[1,0],[0,0],[0,1]], \"simplices\": [[0,1],[1,2]],"
    " \"gamma_faces\": [[0],[2]]}";
static const char* L_VARIFOLD =
    "{\"dimension\": 1, \"weights\": [{\"simplex\": [0,1], \"c\": 1}, {\"simplex\": [1,2], \"c\": 1}]}";

static void test_l_shape(void) {
  polycal_complex* k = NULL;
  polycal_varifold* v = NULL;
  char* report = NULL;
  double mass = 0.0;
  EXPECT(polycal_complex_from_json(L_COMPLEX, &k) == POLYCAL_OK);
  EXPECT(polycal_varifold_from_json(k, L_VARIFOLD, &v) == POLYCAL_OK);
  EXPECT(polycal_varifold_mass(v, &mass) == POLYCAL_OK);
  EXPECT(fabs(mass - 2.0) < 1e-12);
  EXPECT(polycal_stationarity(v, 1e-9, &report) == POLYCAL_CHECK_FAILED);
  EXPECT(report != NULL && strstr(report, "\"stationary\":false") != NULL);
  polycal_string_free(report);
  EXPECT(polycal_certify(v, 1e-9, 0, NULL, &report) == POLYCAL_CHECK_FAILED);
  EXPECT(strstr(report, "not-calibrated") != NULL);
  polycal_string_free(report);
  EXPECT(polycal_deform(v, 10, 0.1, 0, 1e-9, &report) == POLYCAL_E_PRECONDITION);
  EXPECT(strlen(polycal_last_error()) > 0);
  polycal_varifold_free(v);
  polycal_complex_free(k);
}

static void test_demo_pipeline(void) {
  char* bundle = NULL;
  EXPECT(polycal_demo("tetrahedral_cone", NULL, &bundle) == POLYCAL_OK);
  EXPECT(strstr(bundle, "\"complex\"") != NULL);
  polycal_string_free(bundle);

  /* build the Y by hand and certify it with the solver cross-check */
  polycal_complex* k = NULL;
  polycal_varifold* v = NULL;
  polycal_chain* a = NULL;
  char* cert = NULL;
  const char* complex_json =
      "{\"ambient_dim\": 2, \"vertices\": [[0,0],[0,1],[-0.8660254037844386,-0.5],[0.8660254037844386,-0.5]],"
      " \"simplices\": [[0,1,2],[0,1,3],[0,2,3]], \"gamma_faces\": [[1],[2],[3]]}";
  const char* varifold_json =
      "{\"dimension\": 1, \"weights\": [{\"simplex\": [0,1], \"c\": 1}, {\"simplex\": [0,2], \"c\": 1},"
      " {\"simplex\": [0,3], \"c\": 1}]}";
  EXPECT(polycal_complex_from_json(complex_json, &k) == POLYCAL_OK);
  EXPECT(polycal_varifold_from_json(k, varifold_json, &v) == POLYCAL_OK);
  EXPECT(polycal_certify(v, 1e-9, 1, "{\"seed\": 1}", &cert) == POLYCAL_OK);
  EXPECT(strstr(cert, "calibrated-minimizer") != NULL);
  polycal_string_free(cert);

  double phi = 0.0, mass = 0.0;
  EXPECT(polycal_chainify(v, &a) == POLYCAL_OK);
  EXPECT(polycal_chain_phi(a, &phi) == POLYCAL_OK);
  EXPECT(polycal_chain_mass(a, &mass) == POLYCAL_OK);
  EXPECT(fabs(phi - 3.0) < 1e-12 && fabs(mass - 3.0) < 1e-12);

  polycal_chain* b = NULL;
  char* result = NULL;
  EXPECT(polycal_chain_boundary(a, &b) == POLYCAL_OK);
  EXPECT(polycal_minimize(b, NULL, &result) == POLYCAL_OK);
  EXPECT(strstr(result, "\"converged\"") != NULL);
  polycal_string_free(result);

  polycal_chain_free(b);
  polycal_chain_free(a);
  polycal_varifold_free(v);
  polycal_complex_free(k);
}

static void test_groups(void) {
  polycal_group* g = NULL;
  double norm = 0.0;
  int integral = 0;
  char* ball = NULL;
  EXPECT(polycal_group_from_json("{\"kind\":\"subgroup\",\"ambient\":{\"kind\":\"real\"},\"generators\":[2,3]}", &g) ==
         POLYCAL_OK);
  EXPECT(polycal_group_norm(g, "{\"coords\":[-1,1]}", &norm) == POLYCAL_OK);
  EXPECT(fabs(norm - 5.0) < 1e-12);
  EXPECT(polycal_integrality_check(g, &integral) == POLYCAL_OK && integral == 1);
  EXPECT(polycal_norm_ball(g, 3.0, &ball) == POLYCAL_OK);
  polycal_string_free(ball);
  polycal_group_free(g);
}

static void test_errors(void) {
  polycal_complex* k = NULL;
  EXPECT(polycal_complex_from_json("{not json", &k) == POLYCAL_E_PARSE);
  EXPECT(k == NULL);
  EXPECT(polycal_complex_from_json("{\"ambient_dim\":2,\"vertices\":[[0,0]],\"simplices\":[[0,4]]}", &k) ==
         POLYCAL_E_INVALID_ARGUMENT);
  EXPECT(polycal_complex_from_json(NULL, &k) == POLYCAL_E_INVALID_ARGUMENT);
  char* out = NULL;
  EXPECT(polycal_demo("sphere", NULL, &out) == POLYCAL_E_INVALID_ARGUMENT);
  EXPECT(strstr(polycal_last_error(), "sphere") != NULL);
  EXPECT(polycal_demo("y_line", NULL, &out) == POLYCAL_OK);
  EXPECT(strcmp(polycal_last_error(), "") == 0);
  polycal_string_free(out);
  polycal_string_free(NULL);
  polycal_complex_free(NULL);
}

int main(void) {
  test_l_shape();
  test_demo_pipeline();
  test_groups();
  test_errors();
  if (failures == 0) printf("capi: all checks passed (%s)\n", polycal_version());
  return failures == 0 ? 0 : 1;
}

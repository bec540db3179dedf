#include <stdio.h>
#include <string.h>

#include "pathpart.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "failed: %s (%s)\n", #cond, pp_last_error());   \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  const char *spec =
      "{\"graph\": {\"vertices\": [\"a\", \"b\"], \"edges\": [[\"a\", \"b\"]]},"
      " \"decorations\": {\"a\": \"Z2\", \"b\": \"Z3\"}}";
  PpDecGraph *g = NULL;
  PpPartial *p = NULL;
  size_t order = 0;
  bool in = false;
  char *prod = NULL;

  CHECK(pp_decgraph_from_json(spec, &g) == PP_STATUS_OK);
  CHECK(pp_decgraph_aut_order(g, &order) == PP_STATUS_OK && order == 2);
  CHECK(pp_partial_build(g, &p) == PP_STATUS_OK);
  CHECK(pp_partial_in_domain(p, "a b | a", &in) == PP_STATUS_OK && !in);
  CHECK(pp_partial_product(p, "a | b", &prod) == PP_STATUS_OK);
  CHECK(strcmp(prod, "a b") == 0);
  pp_string_free(prod);
  CHECK(pp_partial_product(p, "a b | a", &prod) == PP_STATUS_NOT_IN_DOMAIN);
  CHECK(pp_decgraph_from_json("{", &g) == PP_STATUS_PARSE);
  pp_partial_free(p);
  pp_decgraph_free(g);
  printf("ok %s\n", pp_version());
  return 0;
}

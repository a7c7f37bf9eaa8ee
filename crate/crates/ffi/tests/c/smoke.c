#include <stdio.h>
#include <string.h>
#include "qaff.h"

#define CHECK(expr)                                                   \
    do {                                                              \
        QaffStatus st_ = (expr);                                      \
        if (st_ != QAFF_STATUS_OK) {                                  \
            fprintf(stderr, "%s: %s\n", #expr, qaff_status_message(st_)); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    QaffCartan *c = NULL;
    CHECK(qaff_cartan_load('G', 2, &c));
    int64_t a = 0;
    CHECK(qaff_cartan_entry(c, 2, 1, &a));
    if (a != -1) return 2;

    bool pass = false;
    size_t checked = 0;
    CHECK(qaff_heis_verify(c, QAFF_CONVENTION_NODE_BASE, 2, &pass, &checked));
    if (!pass || checked != 3 * 2 * 2 * 2 * 2) return 3;
    qaff_cartan_free(c);

    QaffScalar *s = NULL;
    CHECK(qaff_scalar_qint(2, 1, &s));
    char *text = NULL;
    CHECK(qaff_scalar_to_string(s, &text));
    if (strcmp(text, "s^2 + s^-2 / 1") != 0) return 4;
    qaff_string_free(text);
    qaff_scalar_free(s);

    QaffVerma *m = NULL;
    CHECK(qaff_verma_build("+", 0, 3, 2, &m));
    bool irreducible = true, has_witness = false;
    int64_t witness = 0;
    CHECK(qaff_verma_irreducible(m, &irreducible, &has_witness, &witness));
    if (irreducible || !has_witness || witness != -1) return 5;
    qaff_verma_free(m);

    if (qaff_cartan_load('Z', 2, &c) != QAFF_STATUS_INVALID_TYPE) return 6;
    printf("ok\n");
    return 0;
}

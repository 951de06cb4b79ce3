#include <math.h>
#include <stdio.h>
#include <string.h>

#include "affchar.h"

static int fail(const char *what) {
    const char *e = aff_last_error();
    fprintf(stderr, "%s: %s\n", what, e ? e : "(no error)");
    return 1;
}

int main(int argc, char **argv) {
    if (argc != 2) return 2;
    FILE *f = fopen(argv[1], "rb");
    if (!f) return 2;
    char json[4096];
    size_t n = fread(json, 1, sizeof json - 1, f);
    fclose(f);
    json[n] = '\0';

    AffRep *rep = NULL;
    if (aff_rep_from_json(json, &rep) != AFF_STATUS_OK) return fail("parse");
    size_t genus = 0;
    if (aff_rep_genus(rep, &genus) != AFF_STATUS_OK || genus != 2) return fail("genus");

    AffSurface *surface = NULL;
    if (aff_rep_realize(rep, &surface) != AFF_STATUS_OK) return fail("realize");
    AffRep *back = NULL;
    if (aff_surface_holonomy(surface, &back) != AFF_STATUS_OK) return fail("holonomy");
    int32_t sign = 0;
    if (aff_rep_volume_sign(back, &sign) != AFF_STATUS_OK || sign != 1) return fail("volume sign");

    char *svg = NULL;
    if (aff_surface_svg(surface, &svg) != AFF_STATUS_OK || strncmp(svg, "<svg", 4) != 0) return fail("svg");
    aff_string_free(svg);

    double value = 0;
    int32_t witness = 0;
    if (aff_jorgensen_row(7, &value, &witness) != AFF_STATUS_OK || !witness || fabs(value - 0.567040) > 1e-6) return fail("jorgensen");

    if (aff_rep_from_json("not json", &rep) != AFF_STATUS_INVALID || aff_last_error() == NULL) return fail("error path");

    aff_rep_free(back);
    aff_surface_free(surface);
    aff_rep_free(rep);
    puts("ok");
    return 0;
}

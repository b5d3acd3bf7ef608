// cc -Iinclude examples/component.c ../../target/debug/libfusion_torsion_ffi.a -lpthread -ldl -lm
#include <stdio.h>
#include "fusion_torsion.h"

int main(int argc, char **argv) {
    const char *spec = argc > 1 ? argv[1] : "uqsu11";
    FtProvider *ring = NULL;
    if (ft_provider_new(spec, &ring) != FT_STATUS_OK) {
        fprintf(stderr, "error: %s\n", ft_last_error_message());
        return 2;
    }
    char *json = NULL;
    FtStatus status = ft_component_report(ring, NULL, &json);
    if (status == FT_STATUS_OK) {
        puts(json);
        ft_string_free(json);
    } else {
        fprintf(stderr, "error: %s\n", ft_last_error_message());
    }
    ft_provider_free(ring);
    return status == FT_STATUS_OK ? 0 : 1;
}

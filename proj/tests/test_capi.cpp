/* Exercises the shared-library interface exactly as an external consumer
 * would: through gl2lab.h only, checking codes, JSON payloads and error
 * reporting. Plain asserts; the binary exits nonzero on the first failure. */
#include "gl2lab.h"

#include <assert.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                      \
    do {                                                                 \
        if (!(cond)) {                                                   \
            fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                  \
        }                                                                \
    } while (0)

static void test_lifecycle(void) {
    gl2lab_ctx* ctx = gl2lab_ctx_new();
    CHECK(ctx != NULL);
    CHECK(strcmp(gl2lab_last_error(ctx), "") == 0);
    CHECK(gl2lab_set_workers(ctx, 2) == GL2LAB_OK);
    CHECK(gl2lab_set_workers(ctx, 0) == GL2LAB_USAGE);
    CHECK(strlen(gl2lab_last_error(ctx)) > 0);
    CHECK(gl2lab_set_budget(ctx, 0, 0, 0) == GL2LAB_OK); /* keep defaults */
    gl2lab_ctx_free(ctx);
    gl2lab_ctx_free(NULL); /* must be a no-op */
}

static void test_classify(void) {
    gl2lab_ctx* ctx = gl2lab_ctx_new();
    const char* gens[] = {"2,0,0,1"};
    char* json = NULL;
    CHECK(gl2lab_classify(ctx, 5, gens, 1, &json) == GL2LAB_OK);
    CHECK(json != NULL);
    CHECK(strstr(json, "SplitNormalizerConj") != NULL);
    CHECK(strstr(json, "\"is_abelian\":true") != NULL);
    gl2lab_string_free(json);

    /* bad inputs surface as usage errors with diagnostics */
    json = NULL;
    CHECK(gl2lab_classify(ctx, 4, gens, 1, &json) == GL2LAB_USAGE);
    CHECK(json == NULL);
    CHECK(strlen(gl2lab_last_error(ctx)) > 0);
    const char* bad[] = {"1,2,3"};
    CHECK(gl2lab_classify(ctx, 5, bad, 1, &json) == GL2LAB_USAGE);
    const char* singular[] = {"0,0,0,0"};
    CHECK(gl2lab_classify(ctx, 5, singular, 1, &json) == GL2LAB_USAGE);
    gl2lab_ctx_free(ctx);
}

static void test_verify(void) {
    gl2lab_ctx* ctx = gl2lab_ctx_new();
    char* json = NULL;
    CHECK(gl2lab_verify(ctx, "lemma34", 5, "a", &json) == GL2LAB_OK);
    CHECK(json != NULL);
    CHECK(strstr(json, "\"pass\":true") != NULL);
    gl2lab_string_free(json);

    json = NULL;
    CHECK(gl2lab_verify(ctx, "lemma33", 5, NULL, &json) == GL2LAB_OK);
    CHECK(json != NULL && json[0] == '['); /* both Cartan pairs */
    gl2lab_string_free(json);

    json = NULL;
    CHECK(gl2lab_verify(ctx, "prop31", 6, NULL, &json) == GL2LAB_OK);
    gl2lab_string_free(json);

    CHECK(gl2lab_verify(ctx, "nope", 5, NULL, &json) == GL2LAB_USAGE);
    CHECK(gl2lab_verify(ctx, "lemma34", 4, "a", &json) == GL2LAB_USAGE);
    gl2lab_ctx_free(ctx);
}

static void test_scan(void) {
    gl2lab_ctx* ctx = gl2lab_ctx_new();
    char* json = NULL;
    CHECK(gl2lab_scan(ctx, "cyclotomic", 17, 1, 0, &json) == GL2LAB_OK);
    CHECK(json != NULL);
    CHECK(strstr(json, "\"violations\":[]") != NULL);
    CHECK(strstr(json, "\"asserted\":true") != NULL);
    CHECK(strstr(json, "elapsed_ms") == NULL); /* timing off by default */
    gl2lab_string_free(json);

    /* timing opt-in */
    CHECK(gl2lab_set_timing(ctx, 1) == GL2LAB_OK);
    json = NULL;
    CHECK(gl2lab_scan(ctx, "cyclotomic", 7, 1, 0, &json) == GL2LAB_OK);
    CHECK(json != NULL && strstr(json, "elapsed_ms") != NULL);
    gl2lab_string_free(json);
    gl2lab_set_timing(ctx, 0);

    CHECK(gl2lab_scan(ctx, "sideways", 17, 1, 0, &json) == GL2LAB_USAGE);
    CHECK(gl2lab_scan(ctx, "cyclotomic", 9, 1, 0, &json) == GL2LAB_USAGE);
    gl2lab_ctx_free(ctx);
}

static void test_cache(void) {
    gl2lab_ctx* ctx = gl2lab_ctx_new();
    char* json = NULL;
    /* cache ops require a configured directory */
    CHECK(gl2lab_cache_op(ctx, "stat", 0, NULL, &json) == GL2LAB_USAGE);
    CHECK(gl2lab_set_cache_dir(ctx, "capi_cache_test_dir") == GL2LAB_OK);
    CHECK(gl2lab_cache_op(ctx, "warm", 7, "cyclic", &json) == GL2LAB_OK);
    gl2lab_string_free(json);
    json = NULL;
    CHECK(gl2lab_cache_op(ctx, "stat", 0, NULL, &json) == GL2LAB_OK);
    CHECK(json != NULL && strstr(json, "p7_cyclic") != NULL);
    gl2lab_string_free(json);
    json = NULL;
    CHECK(gl2lab_cache_op(ctx, "clear", 0, NULL, &json) == GL2LAB_OK);
    CHECK(json != NULL && strstr(json, "\"removed\":1") != NULL);
    gl2lab_string_free(json);
    CHECK(gl2lab_cache_op(ctx, "shred", 0, NULL, &json) == GL2LAB_USAGE);
    gl2lab_ctx_free(ctx);
}

int main(void) {
    test_lifecycle();
    test_classify();
    test_verify();
    test_scan();
    test_cache();
    if (failures) {
        fprintf(stderr, "%d C API check(s) failed\n", failures);
        return 1;
    }
    printf("C API checks passed\n");
    return 0;
}

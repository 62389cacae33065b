/*
 * mini-corpus case 18
 * shape: generic_add   flow: branch   type: int64_t
 *
 * One genuine overflow site is annotated below; the arithmetic sits behind a non-protective branch.
 * The good_* twins apply range guards or constant inputs and must
 * never be reported.  All literals stay inside the 8-bit analog
 * domain so verdicts agree across solver backends.
 *
 * Derived from the flow-variant structure of public CWE-190 test
 * suites; rewritten for the supported language subset.
 */
#include <stdio.h>
#include <stdlib.h>
#include <limits.h>
#include <stdint.h>
#include <math.h>

void case18_stage_0(void)
{
    int acc = 1;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 0: %d\n", step);
}

void case18_stage_1(void)
{
    int acc = 4;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 1: %d\n", step);
}

void case18_stage_2(void)
{
    int acc = 7;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 2: %d\n", step);
}

void case18_stage_3(void)
{
    int acc = 1;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 3: %d\n", step);
}

void case18_stage_4(void)
{
    int acc = 4;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 4: %d\n", step);
}

void case18_stage_5(void)
{
    int acc = 7;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 5: %d\n", step);
}

void case18_stage_6(void)
{
    int acc = 1;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 6: %d\n", step);
}

void case18_stage_7(void)
{
    int acc = 4;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 7: %d\n", step);
}

void case18_stage_8(void)
{
    int acc = 7;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 8: %d\n", step);
}

void case18_stage_9(void)
{
    int acc = 1;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 9: %d\n", step);
}

void case18_stage_10(void)
{
    int acc = 4;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 10: %d\n", step);
}

void case18_stage_11(void)
{
    int acc = 7;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 11: %d\n", step);
}

void case18_stage_12(void)
{
    int acc = 1;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 12: %d\n", step);
}

void case18_stage_13(void)
{
    int acc = 4;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 13: %d\n", step);
}

void case18_stage_14(void)
{
    int acc = 7;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 14: %d\n", step);
}

void case18_stage_15(void)
{
    int acc = 1;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 15: %d\n", step);
}

void case18_stage_16(void)
{
    int acc = 4;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 18 stage 16: %d\n", step);
}

void case18_good_guarded(void)
{
    int64_t data = 0;
    int64_t extra = 0;
    fscanf(stdin, "%lld", &data);
    fscanf(stdin, "%lld", &extra);
    int64_t result = 0;
    if (data <= 60 && data >= -60 && extra <= 60 && extra >= -60) {
        result = data + extra;
        printf("%d\n", (int)result);
    }
}

void case18_good_constant(void)
{
    int64_t data = 5;
    int64_t extra = 4;
    int64_t result = 0;
    result = data + extra;
    printf("%d\n", (int)result);
}

void case18_good_early(void)
{
    int64_t data = 0;
    int64_t extra = 1;
    fscanf(stdin, "%lld", &data);
    if (data > 60 || data < -60) {
        return;
    }
    int64_t result = 0;
    result = data + extra;
    printf("%d\n", (int)result);
}

void case18_bad(void)
{
    int64_t data = 0;
    int64_t extra = 0;
    int64_t result = 0;
    fscanf(stdin, "%lld", &data);
    fscanf(stdin, "%lld", &extra);
    if (data != 42) {
        /* FAULT */
        result = data + extra;
        printf("%d\n", (int)result);
    }
}

int main(void)
{
    case18_stage_0();
    case18_stage_1();
    case18_stage_2();
    case18_stage_3();
    case18_stage_4();
    case18_stage_5();
    case18_stage_6();
    case18_stage_7();
    case18_stage_8();
    case18_stage_9();
    case18_stage_10();
    case18_stage_11();
    case18_stage_12();
    case18_stage_13();
    case18_stage_14();
    case18_stage_15();
    case18_stage_16();
    case18_good_guarded();
    case18_good_constant();
    case18_good_early();
    case18_bad();
    return 0;
}

/*
 * mini-corpus case 26
 * shape: mul_neg_const   flow: direct   type: int64_t
 *
 * One genuine overflow site is annotated below; the tainted value reaches the arithmetic directly.
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

void case26_stage_0(void)
{
    int acc = 3;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 0: %d\n", step);
}

void case26_stage_1(void)
{
    int acc = 6;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 1: %d\n", step);
}

void case26_stage_2(void)
{
    int acc = 9;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 2: %d\n", step);
}

void case26_stage_3(void)
{
    int acc = 3;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 3: %d\n", step);
}

void case26_stage_4(void)
{
    int acc = 6;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 4: %d\n", step);
}

void case26_stage_5(void)
{
    int acc = 9;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 5: %d\n", step);
}

void case26_stage_6(void)
{
    int acc = 3;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 6: %d\n", step);
}

void case26_stage_7(void)
{
    int acc = 6;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 7: %d\n", step);
}

void case26_stage_8(void)
{
    int acc = 9;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 8: %d\n", step);
}

void case26_stage_9(void)
{
    int acc = 3;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 9: %d\n", step);
}

void case26_stage_10(void)
{
    int acc = 6;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 10: %d\n", step);
}

void case26_stage_11(void)
{
    int acc = 9;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 11: %d\n", step);
}

void case26_stage_12(void)
{
    int acc = 3;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 12: %d\n", step);
}

void case26_stage_13(void)
{
    int acc = 6;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 13: %d\n", step);
}

void case26_stage_14(void)
{
    int acc = 9;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 14: %d\n", step);
}

void case26_stage_15(void)
{
    int acc = 3;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 15: %d\n", step);
}

void case26_stage_16(void)
{
    int acc = 6;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 26 stage 16: %d\n", step);
}

void case26_good_guarded(void)
{
    int64_t data = 0;
    fscanf(stdin, "%lld", &data);
    int64_t result = 0;
    if (data <= 13 && data >= -13) {
        result = data * -3;
        printf("%d\n", (int)result);
    }
}

void case26_good_constant(void)
{
    int64_t data = 5;
    int64_t result = 0;
    result = data * -3;
    printf("%d\n", (int)result);
}

void case26_good_early(void)
{
    int64_t data = 0;
    fscanf(stdin, "%lld", &data);
    if (data > 13 || data < -13) {
        return;
    }
    int64_t result = 0;
    result = data * -3;
    printf("%d\n", (int)result);
}

void case26_bad(void)
{
    int64_t data = 0;
    int64_t result = 0;
    fscanf(stdin, "%lld", &data);
    /* FAULT */
    result = data * -3;
    printf("%d\n", (int)result);
}

int main(void)
{
    case26_stage_0();
    case26_stage_1();
    case26_stage_2();
    case26_stage_3();
    case26_stage_4();
    case26_stage_5();
    case26_stage_6();
    case26_stage_7();
    case26_stage_8();
    case26_stage_9();
    case26_stage_10();
    case26_stage_11();
    case26_stage_12();
    case26_stage_13();
    case26_stage_14();
    case26_stage_15();
    case26_stage_16();
    case26_good_guarded();
    case26_good_constant();
    case26_good_early();
    case26_bad();
    return 0;
}

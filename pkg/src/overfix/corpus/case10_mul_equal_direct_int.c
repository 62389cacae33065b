/*
 * mini-corpus case 10
 * shape: mul_equal   flow: direct   type: int
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

void case10_stage_0(void)
{
    int acc = 8;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 0: %d\n", step);
}

void case10_stage_1(void)
{
    int acc = 2;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 1: %d\n", step);
}

void case10_stage_2(void)
{
    int acc = 5;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 2: %d\n", step);
}

void case10_stage_3(void)
{
    int acc = 8;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 3: %d\n", step);
}

void case10_stage_4(void)
{
    int acc = 2;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 4: %d\n", step);
}

void case10_stage_5(void)
{
    int acc = 5;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 5: %d\n", step);
}

void case10_stage_6(void)
{
    int acc = 8;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 6: %d\n", step);
}

void case10_stage_7(void)
{
    int acc = 2;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 7: %d\n", step);
}

void case10_stage_8(void)
{
    int acc = 5;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 8: %d\n", step);
}

void case10_stage_9(void)
{
    int acc = 8;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 9: %d\n", step);
}

void case10_stage_10(void)
{
    int acc = 2;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 10: %d\n", step);
}

void case10_stage_11(void)
{
    int acc = 5;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 11: %d\n", step);
}

void case10_stage_12(void)
{
    int acc = 8;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 12: %d\n", step);
}

void case10_stage_13(void)
{
    int acc = 2;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 13: %d\n", step);
}

void case10_stage_14(void)
{
    int acc = 5;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 14: %d\n", step);
}

void case10_stage_15(void)
{
    int acc = 8;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 15: %d\n", step);
}

void case10_stage_16(void)
{
    int acc = 2;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 10 stage 16: %d\n", step);
}

void case10_good_guarded(void)
{
    int data = 0;
    data = rand();
    int result = 0;
    if (data <= 11 && data >= -11) {
        result = data * data;
        printf("%d\n", (int)result);
    }
}

void case10_good_constant(void)
{
    int data = 5;
    int result = 0;
    result = data * data;
    printf("%d\n", (int)result);
}

void case10_good_early(void)
{
    int data = 0;
    data = rand();
    if (data > 11 || data < -11) {
        return;
    }
    int result = 0;
    result = data * data;
    printf("%d\n", (int)result);
}

void case10_bad(void)
{
    int data = 0;
    int result = 0;
    data = rand();
    /* FAULT */
    result = data * data;
    printf("%d\n", (int)result);
}

int main(void)
{
    case10_stage_0();
    case10_stage_1();
    case10_stage_2();
    case10_stage_3();
    case10_stage_4();
    case10_stage_5();
    case10_stage_6();
    case10_stage_7();
    case10_stage_8();
    case10_stage_9();
    case10_stage_10();
    case10_stage_11();
    case10_stage_12();
    case10_stage_13();
    case10_stage_14();
    case10_stage_15();
    case10_stage_16();
    case10_good_guarded();
    case10_good_constant();
    case10_good_early();
    case10_bad();
    return 0;
}

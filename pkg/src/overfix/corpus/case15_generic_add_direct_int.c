/*
 * mini-corpus case 15
 * shape: generic_add   flow: direct   type: int
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

void case15_stage_0(void)
{
    int acc = 7;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 0: %d\n", step);
}

void case15_stage_1(void)
{
    int acc = 1;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 1: %d\n", step);
}

void case15_stage_2(void)
{
    int acc = 4;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 2: %d\n", step);
}

void case15_stage_3(void)
{
    int acc = 7;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 3: %d\n", step);
}

void case15_stage_4(void)
{
    int acc = 1;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 4: %d\n", step);
}

void case15_stage_5(void)
{
    int acc = 4;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 5: %d\n", step);
}

void case15_stage_6(void)
{
    int acc = 7;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 6: %d\n", step);
}

void case15_stage_7(void)
{
    int acc = 1;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 7: %d\n", step);
}

void case15_stage_8(void)
{
    int acc = 4;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 8: %d\n", step);
}

void case15_stage_9(void)
{
    int acc = 7;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 9: %d\n", step);
}

void case15_stage_10(void)
{
    int acc = 1;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 10: %d\n", step);
}

void case15_stage_11(void)
{
    int acc = 4;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 11: %d\n", step);
}

void case15_stage_12(void)
{
    int acc = 7;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 12: %d\n", step);
}

void case15_stage_13(void)
{
    int acc = 1;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 13: %d\n", step);
}

void case15_stage_14(void)
{
    int acc = 4;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 14: %d\n", step);
}

void case15_stage_15(void)
{
    int acc = 7;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 15: %d\n", step);
}

void case15_stage_16(void)
{
    int acc = 1;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 15 stage 16: %d\n", step);
}

void case15_good_guarded(void)
{
    int data = 0;
    int extra = 0;
    data = rand();
    extra = rand();
    int result = 0;
    if (data <= 60 && data >= -60 && extra <= 60 && extra >= -60) {
        result = data + extra;
        printf("%d\n", (int)result);
    }
}

void case15_good_constant(void)
{
    int data = 5;
    int extra = 4;
    int result = 0;
    result = data + extra;
    printf("%d\n", (int)result);
}

void case15_good_early(void)
{
    int data = 0;
    int extra = 1;
    data = rand();
    if (data > 60 || data < -60) {
        return;
    }
    int result = 0;
    result = data + extra;
    printf("%d\n", (int)result);
}

void case15_bad(void)
{
    int data = 0;
    int extra = 0;
    int result = 0;
    data = rand();
    extra = rand();
    /* FAULT */
    result = data + extra;
    printf("%d\n", (int)result);
}

int main(void)
{
    case15_stage_0();
    case15_stage_1();
    case15_stage_2();
    case15_stage_3();
    case15_stage_4();
    case15_stage_5();
    case15_stage_6();
    case15_stage_7();
    case15_stage_8();
    case15_stage_9();
    case15_stage_10();
    case15_stage_11();
    case15_stage_12();
    case15_stage_13();
    case15_stage_14();
    case15_stage_15();
    case15_stage_16();
    case15_good_guarded();
    case15_good_constant();
    case15_good_early();
    case15_bad();
    return 0;
}

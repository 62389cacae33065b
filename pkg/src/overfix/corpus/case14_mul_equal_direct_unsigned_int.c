/*
 * mini-corpus case 14
 * shape: mul_equal   flow: direct   type: unsigned int
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

void case14_stage_0(void)
{
    int acc = 9;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 0: %d\n", step);
}

void case14_stage_1(void)
{
    int acc = 3;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 1: %d\n", step);
}

void case14_stage_2(void)
{
    int acc = 6;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 2: %d\n", step);
}

void case14_stage_3(void)
{
    int acc = 9;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 3: %d\n", step);
}

void case14_stage_4(void)
{
    int acc = 3;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 4: %d\n", step);
}

void case14_stage_5(void)
{
    int acc = 6;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 5: %d\n", step);
}

void case14_stage_6(void)
{
    int acc = 9;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 6: %d\n", step);
}

void case14_stage_7(void)
{
    int acc = 3;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 7: %d\n", step);
}

void case14_stage_8(void)
{
    int acc = 6;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 8: %d\n", step);
}

void case14_stage_9(void)
{
    int acc = 9;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 9: %d\n", step);
}

void case14_stage_10(void)
{
    int acc = 3;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 10: %d\n", step);
}

void case14_stage_11(void)
{
    int acc = 6;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 11: %d\n", step);
}

void case14_stage_12(void)
{
    int acc = 9;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 12: %d\n", step);
}

void case14_stage_13(void)
{
    int acc = 3;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 13: %d\n", step);
}

void case14_stage_14(void)
{
    int acc = 6;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 14: %d\n", step);
}

void case14_stage_15(void)
{
    int acc = 9;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 15: %d\n", step);
}

void case14_stage_16(void)
{
    int acc = 3;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 14 stage 16: %d\n", step);
}

void case14_good_guarded(void)
{
    unsigned int data = 0;
    fscanf(stdin, "%u", &data);
    unsigned int result = 0;
    if (data <= 11) {
        result = data * data;
        printf("%u\n", result);
    }
}

void case14_good_constant(void)
{
    unsigned int data = 5;
    unsigned int result = 0;
    result = data * data;
    printf("%u\n", result);
}

void case14_good_early(void)
{
    unsigned int data = 0;
    fscanf(stdin, "%u", &data);
    if (data > 11) {
        return;
    }
    unsigned int result = 0;
    result = data * data;
    printf("%u\n", result);
}

void case14_bad(void)
{
    unsigned int data = 0;
    unsigned int result = 0;
    fscanf(stdin, "%u", &data);
    /* FAULT */
    result = data * data;
    printf("%u\n", result);
}

int main(void)
{
    case14_stage_0();
    case14_stage_1();
    case14_stage_2();
    case14_stage_3();
    case14_stage_4();
    case14_stage_5();
    case14_stage_6();
    case14_stage_7();
    case14_stage_8();
    case14_stage_9();
    case14_stage_10();
    case14_stage_11();
    case14_stage_12();
    case14_stage_13();
    case14_stage_14();
    case14_stage_15();
    case14_stage_16();
    case14_good_guarded();
    case14_good_constant();
    case14_good_early();
    case14_bad();
    return 0;
}

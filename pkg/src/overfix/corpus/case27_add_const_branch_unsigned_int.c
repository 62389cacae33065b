/*
 * mini-corpus case 27
 * shape: add_const   flow: branch   type: unsigned int
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

void case27_stage_0(void)
{
    int acc = 1;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 0: %d\n", step);
}

void case27_stage_1(void)
{
    int acc = 4;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 1: %d\n", step);
}

void case27_stage_2(void)
{
    int acc = 7;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 2: %d\n", step);
}

void case27_stage_3(void)
{
    int acc = 1;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 3: %d\n", step);
}

void case27_stage_4(void)
{
    int acc = 4;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 4: %d\n", step);
}

void case27_stage_5(void)
{
    int acc = 7;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 5: %d\n", step);
}

void case27_stage_6(void)
{
    int acc = 1;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 6: %d\n", step);
}

void case27_stage_7(void)
{
    int acc = 4;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 7: %d\n", step);
}

void case27_stage_8(void)
{
    int acc = 7;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 8: %d\n", step);
}

void case27_stage_9(void)
{
    int acc = 1;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 9: %d\n", step);
}

void case27_stage_10(void)
{
    int acc = 4;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 10: %d\n", step);
}

void case27_stage_11(void)
{
    int acc = 7;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 11: %d\n", step);
}

void case27_stage_12(void)
{
    int acc = 1;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 12: %d\n", step);
}

void case27_stage_13(void)
{
    int acc = 4;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 13: %d\n", step);
}

void case27_stage_14(void)
{
    int acc = 7;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 14: %d\n", step);
}

void case27_stage_15(void)
{
    int acc = 1;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 15: %d\n", step);
}

void case27_stage_16(void)
{
    int acc = 4;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 27 stage 16: %d\n", step);
}

void case27_good_guarded(void)
{
    unsigned int data = 0;
    fscanf(stdin, "%u", &data);
    unsigned int result = 0;
    if (data <= 100) {
        result = data + 9;
        printf("%u\n", result);
    }
}

void case27_good_constant(void)
{
    unsigned int data = 5;
    unsigned int result = 0;
    result = data + 9;
    printf("%u\n", result);
}

void case27_good_early(void)
{
    unsigned int data = 0;
    fscanf(stdin, "%u", &data);
    if (data > 100) {
        return;
    }
    unsigned int result = 0;
    result = data + 9;
    printf("%u\n", result);
}

void case27_bad(void)
{
    unsigned int data = 0;
    unsigned int result = 0;
    fscanf(stdin, "%u", &data);
    if (data != 42) {
        /* FAULT */
        result = data + 9;
        printf("%u\n", result);
    }
}

int main(void)
{
    case27_stage_0();
    case27_stage_1();
    case27_stage_2();
    case27_stage_3();
    case27_stage_4();
    case27_stage_5();
    case27_stage_6();
    case27_stage_7();
    case27_stage_8();
    case27_stage_9();
    case27_stage_10();
    case27_stage_11();
    case27_stage_12();
    case27_stage_13();
    case27_stage_14();
    case27_stage_15();
    case27_stage_16();
    case27_good_guarded();
    case27_good_constant();
    case27_good_early();
    case27_bad();
    return 0;
}

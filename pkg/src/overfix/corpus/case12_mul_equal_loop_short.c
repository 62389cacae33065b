/*
 * mini-corpus case 12
 * shape: mul_equal   flow: loop   type: short
 *
 * One genuine overflow site is annotated below; the arithmetic runs inside a counted loop.
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

void case12_stage_0(void)
{
    int acc = 4;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 0: %d\n", step);
}

void case12_stage_1(void)
{
    int acc = 7;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 1: %d\n", step);
}

void case12_stage_2(void)
{
    int acc = 1;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 2: %d\n", step);
}

void case12_stage_3(void)
{
    int acc = 4;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 3: %d\n", step);
}

void case12_stage_4(void)
{
    int acc = 7;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 4: %d\n", step);
}

void case12_stage_5(void)
{
    int acc = 1;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 5: %d\n", step);
}

void case12_stage_6(void)
{
    int acc = 4;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 6: %d\n", step);
}

void case12_stage_7(void)
{
    int acc = 7;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 7: %d\n", step);
}

void case12_stage_8(void)
{
    int acc = 1;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 8: %d\n", step);
}

void case12_stage_9(void)
{
    int acc = 4;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 9: %d\n", step);
}

void case12_stage_10(void)
{
    int acc = 7;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 10: %d\n", step);
}

void case12_stage_11(void)
{
    int acc = 1;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 11: %d\n", step);
}

void case12_stage_12(void)
{
    int acc = 4;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 12: %d\n", step);
}

void case12_stage_13(void)
{
    int acc = 7;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 13: %d\n", step);
}

void case12_stage_14(void)
{
    int acc = 1;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 14: %d\n", step);
}

void case12_stage_15(void)
{
    int acc = 4;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 15: %d\n", step);
}

void case12_stage_16(void)
{
    int acc = 7;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 12 stage 16: %d\n", step);
}

void case12_good_guarded(void)
{
    short data = 0;
    fscanf(stdin, "%hd", &data);
    short result = 0;
    if (data <= 11 && data >= -11) {
        result = data * data;
        printf("%d\n", (int)result);
    }
}

void case12_good_constant(void)
{
    short data = 5;
    short result = 0;
    result = data * data;
    printf("%d\n", (int)result);
}

void case12_good_early(void)
{
    short data = 0;
    fscanf(stdin, "%hd", &data);
    if (data > 11 || data < -11) {
        return;
    }
    short result = 0;
    result = data * data;
    printf("%d\n", (int)result);
}

void case12_bad(void)
{
    short data = 0;
    short acc = 0;
    int k = 0;
    fscanf(stdin, "%hd", &data);
    for (k = 0; k < 2; k = k + 1) {
        /* FAULT */
        acc = data * data;
    }
    printf("%d\n", (int)acc);
}

int main(void)
{
    case12_stage_0();
    case12_stage_1();
    case12_stage_2();
    case12_stage_3();
    case12_stage_4();
    case12_stage_5();
    case12_stage_6();
    case12_stage_7();
    case12_stage_8();
    case12_stage_9();
    case12_stage_10();
    case12_stage_11();
    case12_stage_12();
    case12_stage_13();
    case12_stage_14();
    case12_stage_15();
    case12_stage_16();
    case12_good_guarded();
    case12_good_constant();
    case12_good_early();
    case12_bad();
    return 0;
}

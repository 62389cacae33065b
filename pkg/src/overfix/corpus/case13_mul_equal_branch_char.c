/*
 * mini-corpus case 13
 * shape: mul_equal   flow: branch   type: char
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

void case13_stage_0(void)
{
    int acc = 2;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 0: %d\n", step);
}

void case13_stage_1(void)
{
    int acc = 5;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 1: %d\n", step);
}

void case13_stage_2(void)
{
    int acc = 8;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 2: %d\n", step);
}

void case13_stage_3(void)
{
    int acc = 2;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 3: %d\n", step);
}

void case13_stage_4(void)
{
    int acc = 5;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 4: %d\n", step);
}

void case13_stage_5(void)
{
    int acc = 8;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 5: %d\n", step);
}

void case13_stage_6(void)
{
    int acc = 2;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 6: %d\n", step);
}

void case13_stage_7(void)
{
    int acc = 5;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 7: %d\n", step);
}

void case13_stage_8(void)
{
    int acc = 8;
    int step = 1;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 1;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 8: %d\n", step);
}

void case13_stage_9(void)
{
    int acc = 2;
    int step = 3;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 3;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 9: %d\n", step);
}

void case13_stage_10(void)
{
    int acc = 5;
    int step = 5;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 5;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 10: %d\n", step);
}

void case13_stage_11(void)
{
    int acc = 8;
    int step = 7;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 7;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 11: %d\n", step);
}

void case13_stage_12(void)
{
    int acc = 2;
    int step = 9;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 9;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 12: %d\n", step);
}

void case13_stage_13(void)
{
    int acc = 5;
    int step = 2;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 2;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 13: %d\n", step);
}

void case13_stage_14(void)
{
    int acc = 8;
    int step = 4;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 4;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 14: %d\n", step);
}

void case13_stage_15(void)
{
    int acc = 2;
    int step = 6;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 6;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 15: %d\n", step);
}

void case13_stage_16(void)
{
    int acc = 5;
    int step = 8;
    int k = 0;
    for (k = 0; k < 3; k = k + 1) {
        acc = acc + 8;
    }
    step = acc / 2;
    step = step % 7;
    printf("case 13 stage 16: %d\n", step);
}

void case13_good_guarded(void)
{
    char data = 0;
    fscanf(stdin, "%c", &data);
    char result = 0;
    if (data <= 11 && data >= -11) {
        result = data * data;
        printf("%d\n", (int)result);
    }
}

void case13_good_constant(void)
{
    char data = 5;
    char result = 0;
    result = data * data;
    printf("%d\n", (int)result);
}

void case13_good_early(void)
{
    char data = 0;
    fscanf(stdin, "%c", &data);
    if (data > 11 || data < -11) {
        return;
    }
    char result = 0;
    result = data * data;
    printf("%d\n", (int)result);
}

void case13_bad(void)
{
    char data = 0;
    char result = 0;
    fscanf(stdin, "%c", &data);
    if (data != 42) {
        /* FAULT */
        result = data * data;
        printf("%d\n", (int)result);
    }
}

int main(void)
{
    case13_stage_0();
    case13_stage_1();
    case13_stage_2();
    case13_stage_3();
    case13_stage_4();
    case13_stage_5();
    case13_stage_6();
    case13_stage_7();
    case13_stage_8();
    case13_stage_9();
    case13_stage_10();
    case13_stage_11();
    case13_stage_12();
    case13_stage_13();
    case13_stage_14();
    case13_stage_15();
    case13_stage_16();
    case13_good_guarded();
    case13_good_constant();
    case13_good_early();
    case13_bad();
    return 0;
}

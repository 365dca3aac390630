def collatz_steps(n):
    steps = 0
    while n != 1:
        if not n % 2 == 0:
            n = 3 * n + 1
        else:
            n = n // 2
        steps += 1
    return steps
# probe: collatz_steps(6)
# probe: collatz_steps(1)

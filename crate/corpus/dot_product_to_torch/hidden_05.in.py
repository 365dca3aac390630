def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def power_step(v, u, steps):
    while steps > 0:
        proj = 0
        for i in range(len(v)):
            proj += v[i] * u[i]
        steps -= 1
    return proj

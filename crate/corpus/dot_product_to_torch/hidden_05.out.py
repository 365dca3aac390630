import torch
def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def power_step(v, u, steps):
    while steps > 0:
        proj = torch.dot(v, u)
        steps -= 1
    return proj

import torch

def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def project(v, axis):
    length = torch.norm(axis)
    score = 0
    for i in range(len(v)):
        score += v[i] * axis[i]
    return score / length

import torch
def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def perturb(signal):
    noise = torch.randn(len(signal))
    noisy = torch.add(signal, noise)
    return noisy

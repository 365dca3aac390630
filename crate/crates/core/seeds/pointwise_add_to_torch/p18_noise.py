import torch

def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def perturb(signal):
    noise = torch.randn(len(signal))
    noisy = []
    for i in range(len(signal)):
        noisy.append(signal[i] + noise[i])
    return noisy

import torch

def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def fire(weights, inputs, bias):
    z = 0
    for n in range(len(weights)):
        z += weights[n] * inputs[n]
    return torch.relu(z + bias)

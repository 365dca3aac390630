import torch
def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def expected(probs, payoffs):
    ev = torch.dot(probs, payoffs)
    return ev

'Scoring helpers.'
import torch
def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def score(weights, features):
    s = torch.dot(weights, features)
    return s + 1

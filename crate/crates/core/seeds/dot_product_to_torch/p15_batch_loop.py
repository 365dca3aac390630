import torch

def batch_scores(batch, w):
    scores = []
    for x in batch:
        s = 0.0
        for i in range(len(x)):
            s += x[i] * w[i]
        scores.append(s)
    return torch.tensor(scores)

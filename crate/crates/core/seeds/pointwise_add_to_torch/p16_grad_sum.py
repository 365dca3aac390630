import torch

def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def total_grad(g1, g2):
    g = []
    for idx in range(len(g1)):
        g.append(g1[idx] + g2[idx])
    return torch.stack(g)

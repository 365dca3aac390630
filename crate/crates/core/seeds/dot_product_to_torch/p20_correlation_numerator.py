import torch

def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def covariance_sum(x, y):
    xc = x - torch.mean(x)
    yc = y - torch.mean(y)
    c = 0
    for i in range(len(xc)):
        c += xc[i] * yc[i]
    return c / (len(x) - 1)

import torch
def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def accumulate(a, b, times):
    while times > 0:
        s = torch.add(a, b)
        a = s
        times -= 1
    return a

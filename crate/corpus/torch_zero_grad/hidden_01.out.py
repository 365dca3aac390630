import torch
w = torch.nn.Linear(1, 1)
xs = torch.linspace(0, 1, 10).unsqueeze(1)
ys = 3 * xs + 1
for _ in range(100):
    for p in w.parameters():
        p.grad = None
    err = ((w(xs) - ys) ** 2).mean()
    err.backward()
    for p in w.parameters():
        p.data -= 0.1 * p.grad

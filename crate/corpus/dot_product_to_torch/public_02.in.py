import torch

def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

x = torch.tensor([1.0, 2.0, 3.0])
y = torch.tensor([4.0, 5.0, 6.0])
acc = 0
for i in range(len(x)):
    acc += x[i] * y[i]
print(acc)

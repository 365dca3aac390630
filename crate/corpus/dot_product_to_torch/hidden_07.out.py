import torch
def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
w = torch.ones(4, requires_grad=True)
x = torch.arange(4.0)
loss = torch.dot(w, x)
loss.backward()
print(w.grad)

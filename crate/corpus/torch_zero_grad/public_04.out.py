def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def finetune(trainer, batch):
    for p in trainer.model.parameters():
        p.grad = None
    loss = trainer.model(batch).mean()
    loss.backward()
    trainer.optimizer.step()
    return loss
